/**
 * Typed client for the selection service's JSON API.
 *
 * Methods return discriminated results instead of throwing: the UI renders
 * validation failures (HTTP 400 with a message) inline next to the sliders
 * and transport failures as a page-level banner, so the two must stay
 * distinguishable all the way up.
 */

/** One Pareto-front member as served by GET /api/pareto. */
export interface ParetoMember {
  combination_id: string;
  index: number;
  hyperparameters: Record<string, string>;
  raw: number[];
  scaled: number[];
}

/** Response shape of GET /api/pareto. */
export interface ParetoPayload {
  criteria_names: string[];
  members: ParetoMember[];
}

/** One per-member projection score from POST /api/select. */
export interface ProjectionEntry {
  combination_id: string;
  score: number;
}

/** Response shape of POST /api/select. */
export interface SelectPayload {
  selected_id: string;
  hyperparameters: Record<string, string>;
  resolved_phi: number[];
  projections: ProjectionEntry[];
  front_member_ids: string[];
}

/** Response shape of GET /api/health. */
export interface HealthPayload {
  status: string;
  combinations: number;
  criteria: number;
}

export type ApiResult<T> =
  | { kind: "ok"; payload: T }
  | { kind: "invalid"; message: string; component: number | null }
  | { kind: "network"; message: string };

const describeError = (err: unknown): string =>
  err instanceof Error ? err.message : String(err);

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  health(): Promise<ApiResult<HealthPayload>> {
    return this.get<HealthPayload>("/api/health");
  }

  pareto(): Promise<ApiResult<ParetoPayload>> {
    return this.get<ParetoPayload>("/api/pareto");
  }

  async select(phi: number[]): Promise<ApiResult<SelectPayload>> {
    let response: Response;
    try {
      response = await fetch(`${this.baseUrl}/api/select`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ phi }),
      });
    } catch (err) {
      return { kind: "network", message: describeError(err) };
    }
    if (response.status === 400) {
      let message = "invalid selection request";
      let component: number | null = null;
      try {
        const body = (await response.json()) as { error?: unknown; component?: unknown };
        if (typeof body.error === "string") message = body.error;
        if (typeof body.component === "number") component = body.component;
      } catch {
        // Keep the fallback message; a 400 without a JSON body is still a 400.
      }
      return { kind: "invalid", message, component };
    }
    if (!response.ok) {
      return { kind: "network", message: `unexpected status ${response.status}` };
    }
    try {
      return { kind: "ok", payload: (await response.json()) as SelectPayload };
    } catch (err) {
      return { kind: "network", message: describeError(err) };
    }
  }

  private async get<T>(path: string): Promise<ApiResult<T>> {
    try {
      const response = await fetch(`${this.baseUrl}${path}`);
      if (!response.ok) {
        return { kind: "network", message: `unexpected status ${response.status}` };
      }
      return { kind: "ok", payload: (await response.json()) as T };
    } catch (err) {
      return { kind: "network", message: describeError(err) };
    }
  }
}
