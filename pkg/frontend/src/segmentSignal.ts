/** On-entry segment icon: a brief visual nudge whenever playback enters a
 *  labeled segment. Clicking focuses the comment box and inserts the
 *  current playhead timestamp; hovering reveals the serving hints. */

import { formatTimestamp } from "./format.js";
import { DemoPlayer } from "./player.js";
import type { AnalysisDoc, SegmentInfo } from "./types.js";

const ICON_VISIBLE_MS = 4000;

export interface SegmentSignalOptions {
  player: DemoPlayer;
  analysis: AnalysisDoc;
  container: HTMLElement;
  commentBox: HTMLTextAreaElement;
  visibleMs?: number;
}

function segmentIndexAt(analysis: AnalysisDoc, t: number): number {
  for (let i = 0; i < analysis.segments.length; i++) {
    const seg = analysis.segments[i];
    if (t >= seg.start_ms && t < seg.end_ms) return i;
  }
  return analysis.segments.length - 1;
}

export class SegmentSignal {
  readonly icon: HTMLButtonElement;
  readonly popup: HTMLDivElement;
  private lastIndex = -1;
  private hideTimer: ReturnType<typeof setTimeout> | null = null;
  private detach: () => void;

  constructor(private opts: SegmentSignalOptions) {
    this.icon = document.createElement("button");
    this.icon.type = "button";
    this.icon.className = "segment-signal";
    this.icon.hidden = true;
    this.icon.setAttribute(
      "aria-label",
      "This moment may need a description. Click to start a timestamped comment.",
    );
    this.icon.textContent = "👁";
    this.popup = document.createElement("div");
    this.popup.className = "hint-popup";
    this.popup.setAttribute("role", "tooltip");
    this.popup.hidden = true;
    this.icon.addEventListener("click", () => this.activate());
    this.icon.addEventListener("mouseenter", () => this.showHints());
    this.icon.addEventListener("mouseleave", () => (this.popup.hidden = true));
    this.icon.addEventListener("focus", () => this.showHints());
    this.icon.addEventListener("blur", () => (this.popup.hidden = true));
    opts.container.append(this.icon, this.popup);
    const offTime = opts.player.on("timeupdate", () => this.onTime());
    const offSeek = opts.player.on("seek", () => this.onTime());
    this.detach = () => {
      offTime();
      offSeek();
    };
  }

  private currentSegment(): SegmentInfo {
    const idx = segmentIndexAt(this.opts.analysis, this.opts.player.playheadMs);
    return this.opts.analysis.segments[idx];
  }

  private onTime(): void {
    const idx = segmentIndexAt(this.opts.analysis, this.opts.player.playheadMs);
    if (idx === this.lastIndex) return;
    this.lastIndex = idx;
    const seg = this.opts.analysis.segments[idx];
    if (seg.tier !== "none") this.show();
    else this.hideNow();
  }

  private show(): void {
    this.icon.hidden = false;
    if (this.hideTimer) clearTimeout(this.hideTimer);
    this.hideTimer = setTimeout(() => this.hideNow(), this.opts.visibleMs ?? ICON_VISIBLE_MS);
  }

  private hideNow(): void {
    this.icon.hidden = true;
    this.popup.hidden = true;
    if (this.hideTimer) clearTimeout(this.hideTimer);
    this.hideTimer = null;
  }

  private showHints(): void {
    const seg = this.currentSegment();
    if (!seg.hints.length) return;
    this.popup.textContent = "";
    const list = document.createElement("ul");
    for (const hint of seg.hints) {
      const item = document.createElement("li");
      item.textContent = hint;
      list.appendChild(item);
    }
    this.popup.appendChild(list);
    this.popup.hidden = false;
  }

  /** Focus the comment box and prefix the draft with "M:SS " of the playhead. */
  activate(): void {
    const box = this.opts.commentBox;
    const stamp = `${formatTimestamp(this.opts.player.playheadMs)} `;
    if (!box.value.startsWith(stamp)) {
      box.value = stamp + box.value;
    }
    box.focus();
    box.setSelectionRange(box.value.length, box.value.length);
    box.dispatchEvent(new Event("input", { bubbles: true }));
  }

  dispose(): void {
    this.hideNow();
    this.detach();
    this.icon.remove();
    this.popup.remove();
  }
}
