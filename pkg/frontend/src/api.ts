import type {
  CreateSessionBody,
  MutateResult,
  PresetsResponse,
  SessionState,
  ViolationResponse,
} from "./types.js";

export type FetchLike = (
  input: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<{ status: number; json(): Promise<unknown> }>;

export class ServiceError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

/** Thin typed client over the explorer service; one in-flight mutate at a time. */
export class ExplorerClient {
  private mutateQueue: Promise<unknown> = Promise.resolve();

  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request(path: string, method = "GET", body?: unknown): Promise<unknown> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers: { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await response.json();
    if (response.status >= 400) {
      const message =
        typeof payload === "object" && payload !== null && "error" in payload
          ? String((payload as { error: unknown }).error)
          : `request failed with status ${response.status}`;
      throw new ServiceError(response.status, message);
    }
    return payload;
  }

  async presets(): Promise<PresetsResponse> {
    return (await this.request("/presets")) as PresetsResponse;
  }

  async createSession(body: CreateSessionBody): Promise<SessionState> {
    return (await this.request("/sessions", "POST", body)) as SessionState;
  }

  async getSession(id: string): Promise<SessionState> {
    return (await this.request(`/sessions/${id}`)) as SessionState;
  }

  /**
   * Mutate at an orbit. Violations (409) and frozen-orbit rejections (400)
   * are expected interactions, so they come back as values, not exceptions.
   * Calls are serialized: at most one mutate request is in flight.
   */
  mutate(id: string, orbit: number): Promise<MutateResult> {
    const run = async (): Promise<MutateResult> => {
      const response = await this.fetchImpl(`${this.baseUrl}/sessions/${id}/mutate`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ orbit }),
      });
      const payload = await response.json();
      if (response.status === 200) {
        return { kind: "ok", state: payload as SessionState };
      }
      if (response.status === 409) {
        const v = payload as ViolationResponse;
        return { kind: "violation", witness: v.witness, violations: v.violations };
      }
      if (response.status === 400) {
        return {
          kind: "frozen",
          message: String((payload as { error?: unknown }).error ?? "rejected"),
        };
      }
      return {
        kind: "error",
        status: response.status,
        message: String((payload as { error?: unknown }).error ?? "request failed"),
      };
    };
    const result = this.mutateQueue.then(run, run);
    this.mutateQueue = result.catch(() => undefined);
    return result;
  }

  async undo(id: string): Promise<SessionState> {
    return (await this.request(`/sessions/${id}/undo`, "POST")) as SessionState;
  }

  async fold(id: string): Promise<unknown> {
    return await this.request(`/sessions/${id}/fold`);
  }
}
