/** Canned-response ServiceClient backed by captured wire fixtures. */

import { HttpError, type ServiceClient } from "../src/api.js";
import type {
  AccessibleComment,
  AnalysisDoc,
  CommentDecision,
  DraftCheckResponse,
  HistoryDoc,
  ManifestDoc,
  OnboardingIntro,
  OnboardingManual,
  SuggestionInfo,
} from "../src/types.js";
import fixtures from "./fixtures/service.json";

export const FIX = fixtures as unknown as {
  eight_span_analysis: AnalysisDoc;
  cat_analysis: AnalysisDoc;
  draft_check_this_is_cool: DraftCheckResponse;
  draft_check_playhead_ms: number;
  tiger_manifest: ManifestDoc;
  tiger_accessible: { video_id: string; comments: AccessibleComment[] };
  onboarding_intro: OnboardingIntro;
  onboarding_manual: OnboardingManual;
};

export class FakeClient implements ServiceClient {
  draftCheckCalls: Array<{ draft: string; playheadMs: number }> = [];
  postedComments: string[] = [];
  offline = false;
  draftCheckResponse: DraftCheckResponse = FIX.draft_check_this_is_cool;
  /** When set, draftCheck defers until the matching resolver is called. */
  pendingDraftChecks: Array<(resp: DraftCheckResponse) => void> = [];
  deferDraftChecks = false;
  historyStatus: number | null = 401;

  async getSegments(): Promise<AnalysisDoc> {
    this.failIfOffline();
    return FIX.cat_analysis;
  }

  draftCheck(_videoId: string, draft: string, playheadMs: number): Promise<DraftCheckResponse> {
    this.draftCheckCalls.push({ draft, playheadMs });
    if (this.offline) return Promise.reject(new Error("offline"));
    if (this.deferDraftChecks) {
      return new Promise((resolve) => this.pendingDraftChecks.push(resolve));
    }
    return Promise.resolve(this.draftCheckResponse);
  }

  async getSuggestions(): Promise<SuggestionInfo[]> {
    this.failIfOffline();
    return [];
  }

  async postComment(_videoId: string, text: string): Promise<CommentDecision> {
    this.failIfOffline();
    this.postedComments.push(text);
    return {
      comment_id: `c${this.postedComments.length}`,
      decision: "accepted",
      reason: null,
      category: "descriptive",
      anchor_ms: 0,
    };
  }

  async getAccessibleComments(): Promise<AccessibleComment[]> {
    this.failIfOffline();
    return FIX.tiger_accessible.comments;
  }

  async getManifest(): Promise<ManifestDoc> {
    this.failIfOffline();
    return FIX.tiger_manifest;
  }

  getOnboarding(page: "intro"): Promise<OnboardingIntro>;
  getOnboarding(page: "manual"): Promise<OnboardingManual>;
  getOnboarding(page: string): Promise<unknown> {
    this.failIfOffline();
    return Promise.resolve(page === "intro" ? FIX.onboarding_intro : FIX.onboarding_manual);
  }

  getHistory(): Promise<HistoryDoc> {
    if (this.historyStatus === 401) {
      return Promise.reject(new HttpError(401, "unauthorized"));
    }
    return Promise.resolve({ user_id: "u1", display_name: "Tester", comment_ids: [] });
  }

  private failIfOffline(): void {
    if (this.offline) throw new Error("offline");
  }
}
