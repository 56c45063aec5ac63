/** SVG scatter of a footprint's server-computed PCA projection.
 *
 * Encodings follow the export conventions: point size is relevance, fill
 * is the sentiment bucket (grey neutral, blue positive, red negative),
 * outline marks the dominant emotion when present. Coordinates come from
 * the API untouched except for scaling into the viewport.
 */

import { escapeHtml } from "./html.js";
import type { ProjectionPoint, ProjectionResponse } from "./types.js";

export const WIDTH = 520;
export const HEIGHT = 380;
const PAD = 24;

export const BUCKET_FILL: Record<string, string> = {
  negative: "#c0504d",
  neutral: "#9aa0a6",
  positive: "#4a78c2",
};

export const EMOTION_STROKE: Record<string, string> = {
  anger: "#b3261e",
  disgust: "#7d4f9e",
  fear: "#5b3a8e",
  joy: "#caa53d",
  sadness: "#3a6ea5",
};

export function pointRadius(relevance: number): number {
  return 3 + relevance * 8;
}

function scale(values: number[], lo: number, hi: number): (v: number) => number {
  const min = Math.min(...values);
  const max = Math.max(...values);
  const span = max - min;
  if (span === 0) return () => (lo + hi) / 2;
  return (v) => lo + ((v - min) / span) * (hi - lo);
}

function renderPoint(
  point: ProjectionPoint,
  cx: number,
  cy: number
): string {
  const fill = BUCKET_FILL[point.sentiment_bucket] ?? BUCKET_FILL.neutral;
  const stroke = point.dominant_emotion
    ? ` stroke="${EMOTION_STROKE[point.dominant_emotion] ?? "#444444"}" stroke-width="2"`
    : "";
  const detail =
    `${point.surface} | relevance ${String(point.relevance)} | ` +
    `${point.sentiment_bucket}` +
    (point.dominant_emotion ? ` | ${point.dominant_emotion}` : "") +
    (point.synthetic ? " | synthetic" : "");
  return (
    `<circle cx="${cx.toFixed(1)}" cy="${cy.toFixed(1)}" ` +
    `r="${pointRadius(point.relevance).toFixed(1)}" fill="${fill}"${stroke} ` +
    `fill-opacity="0.85"><title>${escapeHtml(detail)}</title></circle>`
  );
}

export function renderScatter(projection: ProjectionResponse): string {
  const xs = projection.points.map((p) => p.x);
  const ys = projection.points.map((p) => p.y);
  const sx = scale(xs, PAD, WIDTH - PAD);
  const sy = scale(ys, HEIGHT - PAD, PAD); // flip: larger y draws higher
  const circles = projection.points
    .map((p) => renderPoint(p, sx(p.x), sy(p.y)))
    .join("");
  return (
    `<svg class="scatter-plot" viewBox="0 0 ${WIDTH} ${HEIGHT}" ` +
    `width="${WIDTH}" height="${HEIGHT}" role="img" ` +
    `aria-label="projection of ${escapeHtml(projection.source)}">` +
    circles +
    `</svg>`
  );
}
