import { describe, expect, it } from "vitest";

import {
  initialViewState,
  toggleExpanded,
  withSession,
  withUnreachable,
  withViolation,
} from "../src/state.js";
import { sessionFixture } from "./fixtures.js";

describe("view state transitions", () => {
  it("a new session payload clears the violation toast", () => {
    let state = withViolation(initialViewState(), [0], [
      { pair: [1, 2], condition: "no-virtual-2-cycle" },
    ]);
    expect(state.lastWitness).not.toBeNull();
    state = withSession(state, sessionFixture());
    expect(state.lastWitness).toBeNull();
    expect(state.session?.id).toBe("s1");
  });

  it("a violation leaves the session payload untouched", () => {
    const base = withSession(initialViewState(), sessionFixture());
    const after = withViolation(base, [0], [{ pair: [1, 2], condition: "no-virtual-2-cycle" }]);
    expect(after.session).toBe(base.session);
    expect(after.lastWitness?.witness).toEqual([0]);
  });

  it("expansion toggles per site", () => {
    let state = initialViewState();
    state = toggleExpanded(state, "3");
    expect(state.expandedSites.has("3")).toBe(true);
    state = toggleExpanded(state, "3");
    expect(state.expandedSites.has("3")).toBe(false);
  });

  it("unreachable flag survives until the next successful payload", () => {
    let state = withUnreachable(initialViewState());
    expect(state.serviceReachable).toBe(false);
    state = withSession(state, sessionFixture());
    expect(state.serviceReachable).toBe(true);
  });
});
