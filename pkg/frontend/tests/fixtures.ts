import type { ClusterEntry, PeriodicQuiverJson, QuiverJson, SessionState } from "../src/types.js";

export const periodicFixture: PeriodicQuiverJson = {
  period: 2,
  sites: [
    { id: 0, frozen: false },
    { id: 1, frozen: false },
    { id: 2, frozen: true },
    { id: 3, frozen: true },
  ],
  arrows: [
    { from: 0, to: 1, shift: -1, mult: 1 },
    { from: 0, to: 1, shift: 0, mult: 1 },
    { from: 1, to: 3, shift: 0, mult: 1 },
    { from: 2, to: 0, shift: 0, mult: 1 },
  ],
};

export const foldedFixture: QuiverJson = {
  vertices: [
    { id: "0", frozen: false },
    { id: "1", frozen: false },
    { id: "2", frozen: true },
    { id: "3", frozen: true },
  ],
  arrows: [
    { from: "0", to: "1", mult: 2 },
    { from: "1", to: "3", mult: 1 },
    { from: "2", to: "0", mult: 1 },
  ],
};

export function clusterFixture(): Record<string, ClusterEntry> {
  return {
    "0": { rendered: "x[0,0]", termCount: 1, poly: {} },
    "1": { rendered: "x[1,0]", termCount: 1, poly: {} },
    "2": { rendered: "f[2,0]", termCount: 1, poly: {} },
    "3": { rendered: "f[3,0]", termCount: 1, poly: {} },
  };
}

export function sessionFixture(): SessionState {
  return {
    id: "s1",
    history: [],
    periodic: periodicFixture,
    admissible: true,
    violations: [],
    folded: foldedFixture,
    cluster: clusterFixture(),
    undoDepth: 0,
  };
}
