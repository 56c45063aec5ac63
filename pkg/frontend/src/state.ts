/** View state: a pure value folded from API responses and user choices.
 * The shareable part round-trips through the query string (no routing). */

import type {
  DrilldownResponse,
  FootprintsResponse,
  ProjectionResponse,
  ThemeResponse,
} from "./types.js";

export interface AppState {
  word: string;              // theme input as typed
  n: number;                 // candidate count
  k: number;                 // drilldown neighbor count
  footprints: FootprintsResponse | null;
  theme: ThemeResponse | null;
  selected: string | null;   // chosen candidate token
  drill: DrilldownResponse | null;
  scatterId: string | null;
  projection: ProjectionResponse | null;
  error: string | null;      // dismissible banner
  loading: boolean;
}

export const DEFAULT_N = 20;
export const DEFAULT_K = 10;

export function initialState(): AppState {
  return {
    word: "",
    n: DEFAULT_N,
    k: DEFAULT_K,
    footprints: null,
    theme: null,
    selected: null,
    drill: null,
    scatterId: null,
    projection: null,
    error: null,
    loading: false,
  };
}

/** The shareable slice of the state, encoded as a query string. */
export function encodeViewState(state: AppState): string {
  const params = new URLSearchParams();
  if (state.word) params.set("word", state.word);
  if (state.n !== DEFAULT_N) params.set("n", String(state.n));
  if (state.k !== DEFAULT_K) params.set("k", String(state.k));
  if (state.selected) params.set("term", state.selected);
  if (state.scatterId) params.set("scatter", state.scatterId);
  const text = params.toString();
  return text ? `?${text}` : "";
}

export function decodeViewState(search: string): Pick<
  AppState,
  "word" | "n" | "k" | "selected" | "scatterId"
> {
  const params = new URLSearchParams(search);
  const parseCount = (name: string, fallback: number) => {
    const raw = params.get(name);
    const value = raw === null ? NaN : Number(raw);
    return Number.isInteger(value) && value >= 1 ? value : fallback;
  };
  return {
    word: params.get("word") ?? "",
    n: parseCount("n", DEFAULT_N),
    k: parseCount("k", DEFAULT_K),
    selected: params.get("term"),
    scatterId: params.get("scatter"),
  };
}

/** Sources whose usage badge is set for the currently selected candidate.
 * Drilldown panels are rendered only for these (the view invariant). */
export function usedBySources(state: AppState): string[] {
  if (!state.theme || !state.selected) return [];
  const candidate = state.theme.candidates.find((c) => c.token === state.selected);
  if (!candidate) return [];
  return Object.keys(candidate.usage)
    .filter((source) => candidate.usage[source])
    .sort();
}
