/** Thin fetch client for the core server; every number shown in the UI
 * comes from these responses, never from client-side computation. */

import type {
  DrilldownResponse,
  FootprintsResponse,
  ProjectionResponse,
  ThemeResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
  }
}

async function getJson<T>(path: string, signal?: AbortSignal): Promise<T> {
  const response = await fetch(path, { signal });
  if (!response.ok) {
    let detail = `${response.status} ${response.statusText}`;
    try {
      const body = await response.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

/** The surface the UI consumes; controllers depend on this interface so
 * tests can substitute canned payloads. */
export interface Api {
  footprints(signal?: AbortSignal): Promise<FootprintsResponse>;
  theme(word: string, n: number, signal?: AbortSignal): Promise<ThemeResponse>;
  drilldown(word: string, k: number, signal?: AbortSignal): Promise<DrilldownResponse>;
  projection(id: string, signal?: AbortSignal): Promise<ProjectionResponse>;
}

export const httpApi: Api = {
  footprints: (signal) => getJson("/api/footprints", signal),
  theme: (word, n, signal) =>
    getJson(`/api/theme/${encodeURIComponent(word)}?n=${n}`, signal),
  drilldown: (word, k, signal) =>
    getJson(`/api/drilldown/${encodeURIComponent(word)}?k=${k}`, signal),
  projection: (id, signal) =>
    getJson(`/api/projection/${encodeURIComponent(id)}`, signal),
};
