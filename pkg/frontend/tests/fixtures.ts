/** Canned API payloads for tests: three speakers, one theme query. */

import type { Api } from "../src/api.js";
import type {
  ClusterPayload,
  DrilldownResponse,
  FootprintsResponse,
  ProjectionResponse,
  TermPayload,
  ThemeResponse,
} from "../src/types.js";

export function term(
  surface: string,
  overrides: Partial<TermPayload> = {}
): TermPayload {
  return {
    surface,
    kind: "keyword",
    relevance: 0.5,
    sentiment: 0,
    emotions: { anger: 0, disgust: 0, fear: 0, joy: 0, sadness: 0 },
    vector: [0.1, 0.2],
    synthetic: false,
    ...overrides,
  };
}

export const FOOTPRINTS: FootprintsResponse = {
  space_id: "vectors.txt",
  footprints: [
    { id: "MCCAIN", term_count: 24 },
    { id: "OBAMA", term_count: 31 },
    { id: "SANDERS", term_count: 19 },
  ],
};

/** "social" is used by exactly 2 of the 3 speakers; similarities carry
 * awkward digit tails on purpose so byte-matching is meaningful. */
export function themeResponse(n: number): ThemeResponse {
  const candidates = [];
  for (let i = 0; i < n; i++) {
    candidates.push({
      token: i === 0 ? "social" : `token${i}`,
      similarity: 0.987654321 - i * 0.0123456789,
      usage: {
        MCCAIN: i === 0,
        OBAMA: i === 0,
        SANDERS: false,
      },
    });
  }
  return { theme: "values", candidates };
}

function cluster(seedSurface: string, members: [string, number][]): ClusterPayload {
  return {
    seed: term(seedSurface, { relevance: 0.9 }),
    members: members.map(([surface, similarity]) => ({
      term: term(surface),
      similarity,
    })),
  };
}

export const DRILLDOWN: DrilldownResponse = {
  word: "social",
  clusters: {
    MCCAIN: cluster("social", [
      ["healthcare", 0.91234567],
      ["security", 0.8765432109],
    ]),
    OBAMA: cluster("social", [
      ["health", 0.93210987],
      ["income", 0.8123456701],
    ]),
  },
};

export const PROJECTION: ProjectionResponse = {
  source: "OBAMA",
  space_id: "vectors.txt",
  points: [
    {
      surface: "health",
      x: -1.5,
      y: 0.25,
      relevance: 1.0,
      sentiment_bucket: "positive",
      dominant_emotion: null,
      synthetic: false,
    },
    {
      surface: "war",
      x: 2.0,
      y: -0.75,
      relevance: 0.4,
      sentiment_bucket: "negative",
      dominant_emotion: "fear",
      synthetic: false,
    },
    {
      surface: "wall street",
      x: 0.5,
      y: 1.5,
      relevance: 0.7,
      sentiment_bucket: "neutral",
      dominant_emotion: null,
      synthetic: true,
    },
  ],
};

/** An Api built from the canned payloads; individual methods overridable. */
export function fakeApi(overrides: Partial<Api> = {}): Api {
  return {
    footprints: async () => FOOTPRINTS,
    theme: async (_word, n) => themeResponse(n),
    drilldown: async () => DRILLDOWN,
    projection: async () => PROJECTION,
    ...overrides,
  };
}
