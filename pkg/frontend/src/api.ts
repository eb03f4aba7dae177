/** Thin fetch client for the sightline service. Components depend on the
 *  ServiceClient interface so tests can inject canned responses. */

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
} from "./types.js";

export interface ServiceClient {
  getSegments(videoId: string): Promise<AnalysisDoc>;
  draftCheck(videoId: string, draft: string, playheadMs: number): Promise<DraftCheckResponse>;
  getSuggestions(videoId: string, t: number, draft: string): Promise<SuggestionInfo[]>;
  postComment(videoId: string, text: string): Promise<CommentDecision>;
  getAccessibleComments(videoId: string): Promise<AccessibleComment[]>;
  getManifest(videoId: string, autoPause: boolean): Promise<ManifestDoc>;
  getOnboarding(page: "intro"): Promise<OnboardingIntro>;
  getOnboarding(page: "manual"): Promise<OnboardingManual>;
  getHistory(): Promise<HistoryDoc>;
}

export class HttpError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class HttpServiceClient implements ServiceClient {
  constructor(private baseUrl: string, private token: string | null = null) {}

  setToken(token: string | null): void {
    this.token = token;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = { "Content-Type": "application/json" };
    if (this.token) headers["Authorization"] = `Bearer ${this.token}`;
    const resp = await fetch(this.baseUrl + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!resp.ok) {
      throw new HttpError(resp.status, `${method} ${path} -> ${resp.status}`);
    }
    return (await resp.json()) as T;
  }

  async register(displayName: string, password: string): Promise<{ user_id: string; token: string }> {
    const out = await this.request<{ user_id: string; token: string }>("POST", "/users", {
      display_name: displayName,
      password,
    });
    this.token = out.token;
    return out;
  }

  getSegments(videoId: string): Promise<AnalysisDoc> {
    return this.request("GET", `/videos/${videoId}/segments`);
  }

  draftCheck(videoId: string, draft: string, playheadMs: number): Promise<DraftCheckResponse> {
    return this.request("POST", `/videos/${videoId}/draft-check`, {
      draft,
      playhead_ms: Math.round(playheadMs),
    });
  }

  async getSuggestions(videoId: string, t: number, draft: string): Promise<SuggestionInfo[]> {
    const query = `t=${Math.round(t)}&draft=${encodeURIComponent(draft)}`;
    const doc = await this.request<{ suggestions: SuggestionInfo[] }>(
      "GET",
      `/videos/${videoId}/suggestions?${query}`,
    );
    return doc.suggestions;
  }

  postComment(videoId: string, text: string): Promise<CommentDecision> {
    return this.request("POST", `/videos/${videoId}/comments`, { text });
  }

  async getAccessibleComments(videoId: string): Promise<AccessibleComment[]> {
    const doc = await this.request<{ comments: AccessibleComment[] }>(
      "GET",
      `/videos/${videoId}/accessible-comments`,
    );
    return doc.comments;
  }

  getManifest(videoId: string, autoPause: boolean): Promise<ManifestDoc> {
    return this.request("GET", `/videos/${videoId}/playback-manifest?auto_pause=${autoPause}`);
  }

  getOnboarding(page: "intro"): Promise<OnboardingIntro>;
  getOnboarding(page: "manual"): Promise<OnboardingManual>;
  getOnboarding(page: string): Promise<unknown> {
    return this.request("GET", `/onboarding/${page}`);
  }

  getHistory(): Promise<HistoryDoc> {
    return this.request("GET", "/users/me/history");
  }
}
