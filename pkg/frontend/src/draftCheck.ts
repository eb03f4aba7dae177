/** Live draft reminders: debounced draft-check calls rendered as dismissible
 *  chips beside the comment box. Reminders never gate submission, stale
 *  responses are discarded by revision, and a dead service degrades to no
 *  chips at all. */

import type { ServiceClient } from "./api.js";
import type { DraftCheckResponse, NudgeInfo } from "./types.js";

export const DEBOUNCE_MS = 400;

export interface DraftCheckerOptions {
  client: ServiceClient;
  videoId: string;
  textarea: HTMLTextAreaElement;
  chipContainer: HTMLElement;
  getPlayheadMs: () => number;
  debounceMs?: number;
  onResponse?: (resp: DraftCheckResponse) => void;
}

function nudgeKey(n: NudgeInfo): string {
  return `${n.kind}|${n.message}`;
}

export class DraftChecker {
  private revision = 0;
  private rendered = 0; // revision of the chips currently shown
  private timer: ReturnType<typeof setTimeout> | null = null;
  private dismissed = new Set<string>();
  private lastDraft = "";
  offline = false;

  constructor(private opts: DraftCheckerOptions) {
    opts.chipContainer.classList.add("nudge-chips");
    opts.chipContainer.setAttribute("role", "status");
    opts.chipContainer.setAttribute("aria-live", "polite");
    opts.chipContainer.setAttribute("aria-label", "Comment reminders");
    opts.textarea.addEventListener("input", () => this.onInput());
  }

  private onInput(): void {
    const draft = this.opts.textarea.value;
    if (draft !== this.lastDraft) {
      this.lastDraft = draft;
      this.dismissed.clear(); // dismissal holds only until the draft changes
    }
    if (this.timer) clearTimeout(this.timer);
    this.timer = setTimeout(() => void this.check(), this.opts.debounceMs ?? DEBOUNCE_MS);
  }

  /** Issue one draft-check immediately (used by tests and on focus). */
  async check(): Promise<void> {
    const revision = ++this.revision;
    const draft = this.opts.textarea.value;
    try {
      const resp = await this.opts.client.draftCheck(
        this.opts.videoId,
        draft,
        this.opts.getPlayheadMs(),
      );
      if (revision < this.rendered || revision < this.revision) return; // stale
      this.offline = false;
      this.rendered = revision;
      this.render(resp.nudges);
      this.opts.onResponse?.(resp);
    } catch {
      // degrade gracefully: no chips, submission stays possible
      if (revision < this.revision) return;
      this.offline = true;
      this.rendered = revision;
      this.render([]);
    }
  }

  private render(nudges: NudgeInfo[]): void {
    const container = this.opts.chipContainer;
    container.textContent = "";
    for (const nudge of nudges) {
      if (this.dismissed.has(nudgeKey(nudge))) continue;
      const chip = document.createElement("span");
      chip.className = `nudge-chip nudge-${nudge.kind}`;
      chip.dataset.kind = nudge.kind;
      const label = document.createElement("span");
      label.textContent = nudge.message;
      const dismiss = document.createElement("button");
      dismiss.type = "button";
      dismiss.className = "nudge-dismiss";
      dismiss.setAttribute("aria-label", `Dismiss reminder: ${nudge.message}`);
      dismiss.textContent = "×";
      dismiss.addEventListener("click", () => {
        this.dismissed.add(nudgeKey(nudge));
        chip.remove();
      });
      chip.append(label, dismiss);
      container.appendChild(chip);
    }
  }

  chips(): HTMLElement[] {
    return Array.from(this.opts.chipContainer.querySelectorAll(".nudge-chip"));
  }
}
