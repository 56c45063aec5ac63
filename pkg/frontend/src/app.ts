/** DOM shell: dispatch events to the controller, repaint, keep the query
 * string shareable, and cancel superseded theme queries. */

import { httpApi } from "./api.js";
import * as controller from "./controller.js";
import { renderApp } from "./render.js";
import { AppState, decodeViewState, encodeViewState, initialState } from "./state.js";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app container");

let state: AppState = { ...initialState(), ...decodeViewState(location.search) };
let inflight: AbortController | null = null;

function paint() {
  root!.innerHTML = renderApp(state);
  history.replaceState(null, "", location.pathname + encodeViewState(state));
}

function update(next: AppState) {
  state = next;
  paint();
}

function freshSignal(): AbortSignal {
  inflight?.abort();
  inflight = new AbortController();
  return inflight.signal;
}

async function runTheme(word: string, n: number) {
  update({ ...state, word, n, loading: true });
  update(await controller.submitTheme(state, httpApi, word, n, freshSignal()));
}

root.addEventListener("submit", async (event) => {
  const form = event.target as HTMLFormElement;
  if (form.dataset.action !== "theme-form") return;
  event.preventDefault();
  const data = new FormData(form);
  const word = String(data.get("word") ?? "").trim();
  const n = Math.max(1, Number(data.get("n")) || state.n);
  if (word) await runTheme(word, n);
});

root.addEventListener("click", async (event) => {
  const target = (event.target as HTMLElement).closest<HTMLElement>("[data-action]");
  if (!target) return;
  switch (target.dataset.action) {
    case "dismiss":
      update(controller.dismissError(state));
      break;
    case "select":
      update(await controller.selectTerm(state, httpApi, target.dataset.token!));
      break;
    case "scatter":
      update(await controller.showScatter(state, httpApi, target.dataset.id!));
      break;
  }
});

(async () => {
  // capture the shared view before queries rewrite the live state
  const restore = decodeViewState(location.search);
  update(await controller.loadFootprints(state, httpApi));
  if (restore.word) {
    await runTheme(restore.word, restore.n);
    if (restore.selected) {
      update(await controller.selectTerm(state, httpApi, restore.selected));
    }
  }
  if (restore.scatterId) {
    update(await controller.showScatter(state, httpApi, restore.scatterId));
  }
})();
