/** Wire types mirroring the service JSON schemas. The client renders these
 *  verbatim; no accessibility decisions are re-derived in the browser. */

export type Tier = "orange" | "yellow" | "none";

export interface SegmentInfo {
  start_ms: number;
  end_ms: number;
  score: number;
  tier: Tier;
  reasons: string[];
  hints: string[];
}

export interface AnalysisDoc {
  video_id: string;
  duration_ms: number;
  segments: SegmentInfo[];
}

export interface NudgeInfo {
  kind: string; // signal_reminder | facilitator_hint | ...
  message: string;
  target: string;
}

export interface DraftCheckResponse {
  nudges: NudgeInfo[];
  anchor_ms: number | null;
  category: string;
}

export interface SuggestionInfo {
  source: "caption" | "prior_comment";
  ref_id: string;
  text: string;
  anchor_ms: number;
  relevance: number;
}

export interface CommentDecision {
  comment_id: string;
  decision: "accepted" | "rejected";
  reason: string | null;
  category: string;
  anchor_ms: number | null;
}

export interface AccessibleComment {
  comment_id: string;
  anchor_ms: number;
  text: string;
  category: string;
  author_id: string;
}

export interface BeepEventInfo {
  at_ms: number;
  segment_ref: number;
  comment_ids: string[];
  readout: string[];
}

export interface ManifestDoc {
  video_id: string;
  auto_pause: boolean;
  events: BeepEventInfo[];
  keyboard: Record<string, string>; // key -> action id, served by the service
}

export interface OnboardingSection {
  heading: string;
  body: string;
  examples: string[];
  items?: string[];
  notes?: string[];
  more_examples_heading?: string;
  more_examples?: string[];
}

export interface OnboardingIntro {
  title: string;
  sections: OnboardingSection[];
}

export interface OnboardingFeature {
  kind: string;
  name: string;
  description: string;
}

export interface OnboardingManual {
  title: string;
  features: OnboardingFeature[];
}

export interface HistoryDoc {
  user_id: string;
  display_name: string;
  comment_ids: string[];
}
