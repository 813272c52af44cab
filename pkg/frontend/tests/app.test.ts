// @vitest-environment happy-dom
import { beforeEach, describe, expect, it } from "vitest";

import { ExplorerClient, type FetchLike } from "../src/api.js";
import { mountApp } from "../src/app.js";
import { renderPeriodicQuiver } from "../src/render.js";
import { sessionFixture } from "./fixtures.js";
import { mountSkeleton } from "./dom.js";
import type { SessionState } from "../src/types.js";

function serviceDouble() {
  // a scriptable in-memory stand-in that mimics the service status codes
  let state: SessionState = sessionFixture();
  const impl: FetchLike = async (input, init) => {
    const method = init?.method ?? "GET";
    if (input.endsWith("/sessions") && method === "POST") {
      return { status: 201, json: async () => state };
    }
    if (input.endsWith("/mutate")) {
      const { orbit } = JSON.parse(init?.body ?? "{}") as { orbit: number };
      if (orbit === 9) {
        return {
          status: 409,
          json: async () => ({
            error: "violation",
            witness: [9],
            violations: [{ pair: [0, 1], condition: "no-virtual-2-cycle" }],
          }),
        };
      }
      state = {
        ...state,
        history: [...state.history, String(orbit)],
        undoDepth: state.undoDepth + 1,
      };
      return { status: 200, json: async () => state };
    }
    if (input.endsWith("/undo")) {
      state = {
        ...state,
        history: state.history.slice(0, -1),
        undoDepth: state.undoDepth - 1,
      };
      return { status: 200, json: async () => state };
    }
    return { status: 200, json: async () => state };
  };
  return impl;
}

/** innerHTML round-trips markup (self-closing tags, entities); normalize through the DOM. */
function normalized(markup: string): string {
  const scratch = document.createElement("div");
  scratch.innerHTML = markup;
  return scratch.innerHTML;
}

function appWithDouble() {
  mountSkeleton();
  const app = mountApp(document, "http://service");
  // swap in the scripted client (mountApp wires the real one)
  (app as unknown as { client: ExplorerClient }).client = new ExplorerClient(
    "http://service",
    serviceDouble(),
  );
  return app;
}

describe("ExplorerApp", () => {
  beforeEach(() => {
    mountSkeleton();
  });

  it("renders the session payload verbatim after start", async () => {
    const app = appWithDouble();
    await app.start("gammaInfinity", 2);
    const pane = document.getElementById("periodic")!;
    expect(pane.innerHTML).toBe(
      normalized(
        renderPeriodicQuiver(app.state.session!.periodic, {
          witnessSites: [],
          selectedOrbit: null,
        }),
      ),
    );
    expect(document.getElementById("status")!.textContent).toBe("admissible");
  });

  it("clicking a mutable site mutates; frozen sites are inert", async () => {
    const app = appWithDouble();
    await app.start("gammaInfinity", 2);
    await app.clickOrbit(0, false);
    expect(app.state.session!.history).toEqual(["0"]);
    await app.clickOrbit(2, true); // frozen: no service call, no change
    expect(app.state.session!.history).toEqual(["0"]);
    expect(document.getElementById("history")!.textContent).toContain("μ[0]");
  });

  it("a 409 shows the witness toast and keeps the quiver", async () => {
    const app = appWithDouble();
    await app.start("gammaInfinity", 2);
    const before = document.getElementById("periodic")!.innerHTML;
    await app.clickOrbit(9, false);
    const toast = document.getElementById("toast")!.innerHTML;
    expect(toast).toContain("state unchanged");
    expect(app.state.session!.history).toEqual([]);
    // witness highlighting is the only allowed difference
    expect(document.getElementById("periodic")!.innerHTML.replace(/ witness/g, "")).toBe(before);
  });

  it("undo pops one step and disables at the initial state", async () => {
    const app = appWithDouble();
    await app.start("gammaInfinity", 2);
    await app.clickOrbit(0, false);
    const undoButton = document.getElementById("undo") as HTMLButtonElement;
    expect(undoButton.disabled).toBe(false);
    await app.clickUndo();
    expect(app.state.session!.history).toEqual([]);
    expect(undoButton.disabled).toBe(true);
  });

  it("expand toggle re-renders the cluster panel", async () => {
    const app = appWithDouble();
    await app.start("gammaInfinity", 2);
    app.clickExpand("0");
    expect(app.state.expandedSites.has("0")).toBe(true);
  });
});
