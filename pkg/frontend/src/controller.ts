/** State transitions: fold API results (or failures) into the view state.
 * Pure async functions over an injected Api so tests run on canned
 * payloads; the DOM shell in app.ts only dispatches and repaints. */

import type { Api } from "./api.js";
import { AppState, usedBySources } from "./state.js";

function message(err: unknown): string {
  return err instanceof Error ? err.message : String(err);
}

export async function loadFootprints(state: AppState, api: Api): Promise<AppState> {
  try {
    return { ...state, footprints: await api.footprints() };
  } catch (err) {
    return { ...state, error: message(err) };
  }
}

/** Query a theme word. On failure the previous view stays intact and the
 * error lands in the dismissible banner. */
export async function submitTheme(
  state: AppState,
  api: Api,
  word: string,
  n: number,
  signal?: AbortSignal
): Promise<AppState> {
  try {
    const theme = await api.theme(word, n, signal);
    return {
      ...state,
      word,
      n,
      theme,
      selected: null,
      drill: null,
      error: null,
      loading: false,
    };
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") {
      return state; // superseded by a newer query
    }
    return { ...state, word, n, error: message(err), loading: false };
  }
}

/** Select a candidate term and fetch its per-speaker clusters. */
export async function selectTerm(
  state: AppState,
  api: Api,
  token: string,
  signal?: AbortSignal
): Promise<AppState> {
  const selected: AppState = { ...state, selected: token, drill: null };
  if (usedBySources(selected).length === 0) {
    return selected; // nobody uses it; render the empty state without a fetch
  }
  try {
    const drill = await api.drilldown(token, state.k, signal);
    return { ...selected, drill, error: null };
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") {
      return state;
    }
    return { ...selected, error: message(err) };
  }
}

export async function showScatter(
  state: AppState,
  api: Api,
  id: string,
  signal?: AbortSignal
): Promise<AppState> {
  try {
    const projection = await api.projection(id, signal);
    return { ...state, scatterId: id, projection, error: null };
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") {
      return state;
    }
    return { ...state, scatterId: id, projection: null, error: message(err) };
  }
}

export function dismissError(state: AppState): AppState {
  return { ...state, error: null };
}
