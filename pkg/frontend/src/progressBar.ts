/** Color labels under the scrub bar: one span per labeled segment, orange
 *  for severe gaps, yellow for secondary ones. Extents come straight from
 *  the analysis document. */

import type { AnalysisDoc } from "./types.js";

export function renderProgressLabels(container: HTMLElement, analysis: AnalysisDoc): void {
  container.textContent = "";
  container.classList.add("gap-label-track");
  container.setAttribute("role", "presentation");
  for (const seg of analysis.segments) {
    if (seg.tier === "none") continue;
    const span = document.createElement("div");
    span.className = `gap-span gap-${seg.tier}`;
    const left = (seg.start_ms / analysis.duration_ms) * 100;
    const width = ((seg.end_ms - seg.start_ms) / analysis.duration_ms) * 100;
    span.style.left = `${left}%`;
    span.style.width = `${width}%`;
    span.dataset.startMs = String(seg.start_ms);
    span.dataset.endMs = String(seg.end_ms);
    span.dataset.tier = seg.tier;
    span.setAttribute("aria-hidden", "true"); // decorative; hints carry the content
    container.appendChild(span);
  }
}
