/** Pure HTML renderers: same state in, same markup out.
 *
 * Numbers are printed with String(): the UI never reformats, so every
 * similarity on screen is byte-traceable to an API payload. Sentiment and
 * emotion badges follow the artifact conventions (neutral band at +/-0.15,
 * dominant emotion only at >= 0.5).
 */

import { escapeHtml } from "./html.js";
import { renderScatter } from "./scatter.js";
import { AppState, usedBySources } from "./state.js";
import type { ClusterPayload, TermPayload } from "./types.js";

export function sentimentBucket(sentiment: number): "negative" | "neutral" | "positive" {
  if (sentiment < -0.15) return "negative";
  if (sentiment > 0.15) return "positive";
  return "neutral";
}

const EMOTIONS = ["anger", "disgust", "fear", "joy", "sadness"] as const;

export function dominantEmotion(emotions: Record<string, number>): string | null {
  let bestName: string | null = null;
  let bestValue = -1;
  for (const name of EMOTIONS) {
    const value = emotions[name] ?? 0;
    if (value > bestValue) {
      bestName = name;
      bestValue = value;
    }
  }
  return bestValue >= 0.5 ? bestName : null;
}

function termBadges(term: TermPayload): string {
  const bucket = sentimentBucket(term.sentiment);
  const emotion = dominantEmotion(term.emotions);
  const parts = [`<span class="badge badge-${bucket}">${bucket}</span>`];
  if (emotion) parts.push(`<span class="badge badge-emotion">${emotion}</span>`);
  if (term.synthetic) parts.push(`<span class="badge badge-synthetic">synthetic</span>`);
  return parts.join(" ");
}

function renderBanner(state: AppState): string {
  if (!state.error) return "";
  return (
    `<div class="banner" role="alert">${escapeHtml(state.error)}` +
    `<button data-action="dismiss" class="banner-dismiss">dismiss</button></div>`
  );
}

function renderThemeForm(state: AppState): string {
  return (
    `<form data-action="theme-form" class="theme-form">` +
    `<input name="word" placeholder="theme word, e.g. values" value="${escapeHtml(state.word)}">` +
    `<input name="n" type="number" min="1" value="${state.n}" class="count">` +
    `<button type="submit">find neighbors</button>` +
    (state.loading ? `<span class="loading">querying...</span>` : "") +
    `</form>`
  );
}

function renderUsageBadges(usage: Record<string, boolean>): string {
  return Object.keys(usage)
    .sort()
    .map((source) => {
      const cls = usage[source] ? "usage-badge used" : "usage-badge";
      return `<span class="${cls}">${escapeHtml(source)}</span>`;
    })
    .join(" ");
}

function renderCandidates(state: AppState): string {
  if (!state.theme) return "";
  const rows = state.theme.candidates
    .map((candidate) => {
      const selected = candidate.token === state.selected ? " selected" : "";
      return (
        `<tr class="candidate${selected}" data-action="select" ` +
        `data-token="${escapeHtml(candidate.token)}">` +
        `<td class="token">${escapeHtml(candidate.token)}</td>` +
        `<td class="similarity">${String(candidate.similarity)}</td>` +
        `<td class="usage">${renderUsageBadges(candidate.usage)}</td></tr>`
      );
    })
    .join("");
  return (
    `<section class="candidates"><h2>closest to ` +
    `&quot;${escapeHtml(state.theme.theme)}&quot;</h2>` +
    `<table><thead><tr><th>token</th><th>similarity</th><th>used by</th></tr></thead>` +
    `<tbody>${rows}</tbody></table>` +
    `<p class="hint">pick a term used by several speakers to compare how each one frames it</p>` +
    `</section>`
  );
}

function renderPanel(source: string, cluster: ClusterPayload): string {
  const members = cluster.members
    .map(
      (member) =>
        `<li><span class="surface">${escapeHtml(member.term.surface)}</span> ` +
        `<span class="similarity">${String(member.similarity)}</span> ` +
        termBadges(member.term) + `</li>`
    )
    .join("");
  return (
    `<article class="panel" data-source="${escapeHtml(source)}">` +
    `<h3>${escapeHtml(source)}</h3>` +
    `<p class="seed">around <strong>${escapeHtml(cluster.seed.surface)}</strong> ` +
    termBadges(cluster.seed) + `</p>` +
    `<ul>${members}</ul></article>`
  );
}

function renderDrilldown(state: AppState): string {
  if (!state.selected) return "";
  const heading = `<h2>per-speaker view of &quot;${escapeHtml(state.selected)}&quot;</h2>`;
  const allowed = usedBySources(state);
  if (allowed.length === 0) {
    return (
      `<section class="drilldown">${heading}` +
      `<p class="empty">no speaker uses this term</p></section>`
    );
  }
  if (!state.drill) {
    return `<section class="drilldown">${heading}<p class="loading">loading...</p></section>`;
  }
  // panels only for speakers whose usage badge is set (view invariant)
  const panels = allowed
    .filter((source) => state.drill && source in state.drill.clusters)
    .map((source) => renderPanel(source, state.drill!.clusters[source]))
    .join("");
  return `<section class="drilldown">${heading}<div class="panels">${panels}</div></section>`;
}

function renderScatterSection(state: AppState): string {
  if (!state.footprints) return "";
  const tabs = state.footprints.footprints
    .map((fp) => {
      const active = fp.id === state.scatterId ? " active" : "";
      return (
        `<button class="tab${active}" data-action="scatter" ` +
        `data-id="${escapeHtml(fp.id)}">${escapeHtml(fp.id)} (${fp.term_count})</button>`
      );
    })
    .join(" ");
  const plot =
    state.projection && state.projection.source === state.scatterId
      ? renderScatter(state.projection)
      : state.scatterId
        ? `<p class="loading">loading projection...</p>`
        : `<p class="hint">pick a footprint to see its 2-D projection</p>`;
  return (
    `<section class="scatter"><h2>footprint projections</h2>` +
    `<div class="tabs">${tabs}</div>${plot}</section>`
  );
}

export function renderApp(state: AppState): string {
  return (
    `<header><h1>political footprints explorer</h1></header>` +
    renderBanner(state) +
    renderThemeForm(state) +
    renderCandidates(state) +
    renderDrilldown(state) +
    renderScatterSection(state)
  );
}
