// Wire types mirroring the explorer service JSON payloads.
// The UI performs no quiver math: every structure here is rendered verbatim.

export interface SiteJson {
  id: number;
  frozen: boolean;
}

export interface PeriodicArrowJson {
  from: number;
  to: number;
  shift: number;
  mult: number;
}

export interface PeriodicQuiverJson {
  period: number;
  sites: SiteJson[];
  arrows: PeriodicArrowJson[];
}

export interface VertexJson {
  id: string;
  frozen: boolean;
}

export interface ArrowJson {
  from: string;
  to: string;
  mult: number;
}

export interface QuiverJson {
  vertices: VertexJson[];
  arrows: ArrowJson[];
}

export interface Violation {
  pair: [number, number] | number[];
  condition: string;
}

export interface ClusterEntry {
  rendered: string;
  termCount: number;
  poly: unknown;
}

export interface SessionState {
  id: string;
  history: string[];
  periodic: PeriodicQuiverJson;
  admissible: boolean;
  violations: Violation[];
  folded: QuiverJson;
  cluster: Record<string, ClusterEntry>;
  undoDepth: number;
}

export interface ViolationResponse {
  error: string;
  witness: number[];
  violations: Violation[];
}

export type MutateResult =
  | { kind: "ok"; state: SessionState }
  | { kind: "violation"; witness: number[]; violations: Violation[] }
  | { kind: "frozen"; message: string }
  | { kind: "error"; status: number; message: string };

export interface PresetsResponse {
  presets: Record<string, string>;
}

export interface CreateSessionBody {
  preset?: string;
  n?: number;
  quiver?: QuiverJson;
  periodic?: PeriodicQuiverJson;
}
