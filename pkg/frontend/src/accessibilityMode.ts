/** Accessibility mode for blind and low-vision playback: a beep at the end
 *  of every segment that has curated comments, optional auto-pause, and
 *  keyboard-driven read-out through an ARIA live region. Key bindings come
 *  from the manifest (source of truth is the service), mapped here onto
 *  behavior: next_comment cycles with wrap, exit_readout_and_resume leaves
 *  read-out and resumes playback. */

import type { BeepFn } from "./beep.js";
import { DemoPlayer } from "./player.js";
import type { BeepEventInfo, ManifestDoc } from "./types.js";

export interface AccessibilityModeOptions {
  player: DemoPlayer;
  manifest: ManifestDoc;
  liveRegion: HTMLElement;
  beep: BeepFn;
  keyTarget?: EventTarget; // defaults to document
}

export class AccessibilityMode {
  activeEvent: BeepEventInfo | null = null;
  readoutCursor = -1;
  private lastPlayhead: number;
  private detachers: Array<() => void> = [];
  private keyHandler = (ev: Event) => this.onKey(ev as KeyboardEvent);

  constructor(private opts: AccessibilityModeOptions) {
    const region = opts.liveRegion;
    region.setAttribute("aria-live", "assertive");
    region.setAttribute("role", "status");
    region.classList.add("readout-region");
    this.lastPlayhead = opts.player.playheadMs;
    this.detachers.push(opts.player.on("timeupdate", () => this.onTime()));
    this.detachers.push(opts.player.on("seek", () => (this.lastPlayhead = opts.player.playheadMs)));
    const target = opts.keyTarget ?? document;
    target.addEventListener("keydown", this.keyHandler);
    this.detachers.push(() => target.removeEventListener("keydown", this.keyHandler));
  }

  private onTime(): void {
    const now = this.opts.player.playheadMs;
    const prev = this.lastPlayhead;
    this.lastPlayhead = now;
    if (now <= prev) return;
    const crossed = this.opts.manifest.events.find((ev) => prev < ev.at_ms && ev.at_ms <= now);
    if (!crossed) return;
    this.opts.beep();
    this.activeEvent = crossed;
    this.readoutCursor = -1;
    if (this.opts.manifest.auto_pause) {
      this.opts.player.pause();
      this.announce(
        `${crossed.comment_ids.length} comment${crossed.comment_ids.length === 1 ? "" : "s"} available. Press Shift to read.`,
      );
    }
  }

  private onKey(ev: KeyboardEvent): void {
    if (!this.activeEvent) return;
    const action = this.opts.manifest.keyboard[ev.key === " " ? "Space" : ev.key];
    if (action === "next_comment") {
      ev.preventDefault();
      this.readoutCursor = (this.readoutCursor + 1) % this.activeEvent.readout.length;
      this.announce(this.activeEvent.readout[this.readoutCursor]);
    } else if (action === "exit_readout_and_resume") {
      ev.preventDefault();
      this.exitReadout();
    }
  }

  private exitReadout(): void {
    this.activeEvent = null;
    this.readoutCursor = -1;
    this.announce("");
    this.opts.player.play();
  }

  private announce(text: string): void {
    this.opts.liveRegion.textContent = text;
  }

  dispose(): void {
    for (const off of this.detachers) off();
    this.detachers = [];
  }
}
