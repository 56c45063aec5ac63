/** Payload shapes of the core server's JSON API (mirrored exactly). */

export interface FootprintSummary {
  id: string;
  term_count: number;
}

export interface FootprintsResponse {
  space_id: string;
  footprints: FootprintSummary[];
}

export interface TermPayload {
  surface: string;
  kind: "entity" | "keyword";
  relevance: number;
  sentiment: number;
  emotions: Record<string, number>;
  vector: number[];
  synthetic: boolean;
}

export interface ThemeCandidate {
  token: string;
  similarity: number;
  usage: Record<string, boolean>;
}

export interface ThemeResponse {
  theme: string;
  candidates: ThemeCandidate[];
}

export interface ClusterMember {
  term: TermPayload;
  similarity: number;
}

export interface ClusterPayload {
  seed: TermPayload;
  members: ClusterMember[];
}

export interface DrilldownResponse {
  word: string;
  clusters: Record<string, ClusterPayload>;
}

export interface ProjectionPoint {
  surface: string;
  x: number;
  y: number;
  relevance: number;
  sentiment_bucket: "negative" | "neutral" | "positive";
  dominant_emotion: string | null;
  synthetic: boolean;
}

export interface ProjectionResponse {
  source: string;
  space_id: string;
  points: ProjectionPoint[];
}
