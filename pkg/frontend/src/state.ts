import type { SessionState, Violation } from "./types.js";

/**
 * View state derived solely from service responses. The UI owns selection,
 * expansion toggles, and the last violation toast — never quiver math.
 */
export interface ViewState {
  session: SessionState | null;
  selectedOrbit: number | null;
  /** Cluster panels the user expanded past the term-count truncation. */
  expandedSites: ReadonlySet<string>;
  lastWitness: { witness: number[]; violations: Violation[] } | null;
  serviceReachable: boolean;
}

export function initialViewState(): ViewState {
  return {
    session: null,
    selectedOrbit: null,
    expandedSites: new Set(),
    lastWitness: null,
    serviceReachable: true,
  };
}

export function withSession(state: ViewState, session: SessionState): ViewState {
  // a fresh payload clears any stale violation toast and selection
  return {
    ...state,
    session,
    lastWitness: null,
    serviceReachable: true,
  };
}

export function withViolation(
  state: ViewState,
  witness: number[],
  violations: Violation[],
): ViewState {
  // the session payload is untouched: a rejected mutation changes nothing
  return { ...state, lastWitness: { witness, violations } };
}

export function withSelection(state: ViewState, orbit: number | null): ViewState {
  return { ...state, selectedOrbit: orbit };
}

export function toggleExpanded(state: ViewState, site: string): ViewState {
  const expandedSites = new Set(state.expandedSites);
  if (expandedSites.has(site)) {
    expandedSites.delete(site);
  } else {
    expandedSites.add(site);
  }
  return { ...state, expandedSites };
}

export function withUnreachable(state: ViewState): ViewState {
  return { ...state, serviceReachable: false };
}
