/** Related-reference panel: captions and earlier comments that share ground
 *  with the draft, surfaced while writing so contributions stay relevant
 *  and non-redundant. */

import type { ServiceClient } from "./api.js";

export interface SuggestionPanelOptions {
  client: ServiceClient;
  videoId: string;
  container: HTMLElement;
  textarea: HTMLTextAreaElement;
  getPlayheadMs: () => number;
  debounceMs?: number;
}

export class SuggestionPanel {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private revision = 0;

  constructor(private opts: SuggestionPanelOptions) {
    opts.container.classList.add("reference-panel");
    opts.container.setAttribute("aria-label", "Related captions and comments");
    opts.container.setAttribute("role", "complementary");
    opts.textarea.addEventListener("input", () => {
      if (this.timer) clearTimeout(this.timer);
      this.timer = setTimeout(() => void this.refresh(), this.opts.debounceMs ?? 400);
    });
  }

  async refresh(): Promise<void> {
    const revision = ++this.revision;
    try {
      const suggestions = await this.opts.client.getSuggestions(
        this.opts.videoId,
        this.opts.getPlayheadMs(),
        this.opts.textarea.value,
      );
      if (revision !== this.revision) return;
      const container = this.opts.container;
      container.textContent = "";
      if (!suggestions.length) return;
      const list = document.createElement("ul");
      for (const s of suggestions) {
        const item = document.createElement("li");
        item.className = `reference reference-${s.source}`;
        item.textContent = s.source === "caption" ? `Caption: ${s.text}` : `Comment: ${s.text}`;
        list.appendChild(item);
      }
      container.appendChild(list);
    } catch {
      if (revision === this.revision) this.opts.container.textContent = "";
    }
  }
}
