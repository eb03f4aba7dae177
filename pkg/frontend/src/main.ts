/** Demo page assembly: a stand-in player plus every companion feature wired
 *  to the service. Exported as buildUi() so tests can assemble the same DOM
 *  with a fake client. */

import { HttpServiceClient, type ServiceClient } from "./api.js";
import { AccessibilityMode } from "./accessibilityMode.js";
import { renderAccessibleList } from "./accessibleList.js";
import { makeBeep, type BeepFn } from "./beep.js";
import { DraftChecker } from "./draftCheck.js";
import { formatTimestamp } from "./format.js";
import { OnboardingTabs } from "./onboarding.js";
import { DemoPlayer } from "./player.js";
import { renderProgressLabels } from "./progressBar.js";
import { SegmentSignal } from "./segmentSignal.js";
import { SuggestionPanel } from "./suggestions.js";
import type { AnalysisDoc, ManifestDoc } from "./types.js";

export interface Ui {
  root: HTMLElement;
  player: DemoPlayer;
  commentBox: HTMLTextAreaElement;
  submitButton: HTMLButtonElement;
  statusLine: HTMLElement;
  draftChecker: DraftChecker;
  signal: SegmentSignal;
  accessibility: AccessibilityMode | null;
  accessibilityToggle: HTMLInputElement;
  refreshList: () => Promise<void>;
}

export interface BuildOptions {
  client: ServiceClient;
  videoId: string;
  analysis: AnalysisDoc;
  manifest: ManifestDoc;
  beep?: BeepFn;
  debounceMs?: number;
}

export function buildUi(host: HTMLElement, opts: BuildOptions): Ui {
  const { client, videoId, analysis, manifest } = opts;
  const root = document.createElement("main");
  root.className = "sightline-demo";
  root.setAttribute("aria-label", "Demo player");

  const player = new DemoPlayer(analysis.duration_ms);

  // player chrome
  const stage = document.createElement("div");
  stage.className = "stage";
  const clock = document.createElement("output");
  clock.className = "clock";
  clock.setAttribute("aria-label", "Playback position");
  clock.textContent = "0:00";
  const controls = document.createElement("div");
  const playBtn = document.createElement("button");
  playBtn.type = "button";
  playBtn.textContent = "Play";
  playBtn.addEventListener("click", () => (player.playing ? player.pause() : player.play()));
  player.on("play", () => (playBtn.textContent = "Pause"));
  player.on("pause", () => (playBtn.textContent = "Play"));
  player.on("timeupdate", () => (clock.textContent = formatTimestamp(player.playheadMs)));
  controls.appendChild(playBtn);

  // progress bar with color labels underneath
  const bar = document.createElement("div");
  bar.className = "progress";
  const track = document.createElement("div");
  renderProgressLabels(track, analysis);
  bar.appendChild(track);

  const signalHost = document.createElement("div");
  signalHost.className = "signal-host";
  stage.append(signalHost, clock, controls, bar);

  // comment composer
  const composer = document.createElement("section");
  composer.setAttribute("aria-label", "Write a comment");
  const boxLabel = document.createElement("label");
  boxLabel.htmlFor = "comment-box";
  boxLabel.textContent = "Your comment";
  const commentBox = document.createElement("textarea");
  commentBox.id = "comment-box";
  const chipRow = document.createElement("div");
  const submitButton = document.createElement("button");
  submitButton.type = "button";
  submitButton.id = "submit-comment";
  submitButton.textContent = "Post comment";
  const statusLine = document.createElement("p");
  statusLine.setAttribute("role", "status");
  statusLine.className = "submit-status";
  composer.append(boxLabel, commentBox, chipRow, submitButton, statusLine);

  const referencesHost = document.createElement("aside");
  const listHost = document.createElement("section");
  listHost.setAttribute("aria-label", "Accessible comments");

  const draftChecker = new DraftChecker({
    client,
    videoId,
    textarea: commentBox,
    chipContainer: chipRow,
    getPlayheadMs: () => player.playheadMs,
    debounceMs: opts.debounceMs,
  });
  new SuggestionPanel({
    client,
    videoId,
    container: referencesHost,
    textarea: commentBox,
    getPlayheadMs: () => player.playheadMs,
    debounceMs: opts.debounceMs,
  });
  const signal = new SegmentSignal({ player, analysis, container: signalHost, commentBox });

  const refreshList = async () => {
    renderAccessibleList(listHost, await client.getAccessibleComments(videoId));
  };

  // submission is never gated by reminders; the decision is surfaced after
  submitButton.addEventListener("click", () => {
    void (async () => {
      const text = commentBox.value.trim();
      if (!text) return;
      try {
        const decision = await client.postComment(videoId, text);
        statusLine.textContent =
          decision.decision === "accepted"
            ? "Added to the accessible comment list. Thank you!"
            : `Posted. Not added to the accessible list (${decision.reason ?? "not eligible"}).`;
        commentBox.value = "";
        chipRow.textContent = "";
        await refreshList();
      } catch {
        statusLine.textContent = "Posting failed; the service is unreachable.";
      }
    })();
  });

  // accessibility mode
  const toggleLabel = document.createElement("label");
  const accessibilityToggle = document.createElement("input");
  accessibilityToggle.type = "checkbox";
  toggleLabel.append(accessibilityToggle, document.createTextNode(" Accessibility mode (beep + read-out)"));
  const liveRegion = document.createElement("div");
  let accessibility: AccessibilityMode | null = null;
  const ui: Ui = {
    root,
    player,
    commentBox,
    submitButton,
    statusLine,
    draftChecker,
    signal,
    accessibility,
    accessibilityToggle,
    refreshList,
  };
  accessibilityToggle.addEventListener("change", () => {
    if (accessibilityToggle.checked && !ui.accessibility) {
      ui.accessibility = new AccessibilityMode({
        player,
        manifest,
        liveRegion,
        beep: opts.beep ?? makeBeep(),
      });
    } else if (!accessibilityToggle.checked && ui.accessibility) {
      ui.accessibility.dispose();
      ui.accessibility = null;
    }
  });

  root.append(stage, composer, referencesHost, listHost, toggleLabel, liveRegion);
  host.appendChild(root);
  return ui;
}

/** Entry point for the demo page: registers a throwaway viewer account,
 *  posts nothing, and wires the page to ?video=<id>&service=<base-url>. */
export async function initDemoPage(): Promise<void> {
  const params = new URLSearchParams(location.search);
  const base = params.get("service") ?? "http://127.0.0.1:8767";
  const videoId = params.get("video") ?? "tigers-doc";
  const client = new HttpServiceClient(base);
  await client.register(`viewer-${Math.random().toString(36).slice(2, 8)}`, "demo");
  const [analysis, manifest] = await Promise.all([
    client.getSegments(videoId),
    client.getManifest(videoId, true),
  ]);
  const ui = buildUi(document.body, { client, videoId, analysis, manifest });
  new OnboardingTabs(client, document.body);
  await ui.refreshList();
  ui.player.startClock();
}
