import { beforeEach, describe, expect, it } from "vitest";

import { renderProgressLabels } from "../src/progressBar.js";
import type { AnalysisDoc } from "../src/types.js";
import { FIX } from "./helpers.js";

describe("progress-bar labels", () => {
  let track: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = "";
    track = document.createElement("div");
    document.body.appendChild(track);
  });

  it("renders one span per labeled segment: 5 orange + 3 yellow -> 8 spans", () => {
    renderProgressLabels(track, FIX.eight_span_analysis);
    const spans = track.querySelectorAll<HTMLElement>(".gap-span");
    expect(spans).toHaveLength(8);
    expect(track.querySelectorAll(".gap-orange")).toHaveLength(5);
    expect(track.querySelectorAll(".gap-yellow")).toHaveLength(3);
  });

  it("span extents match the analysis extents exactly", () => {
    const analysis = FIX.eight_span_analysis;
    renderProgressLabels(track, analysis);
    const labeled = analysis.segments.filter((s) => s.tier !== "none");
    const spans = Array.from(track.querySelectorAll<HTMLElement>(".gap-span"));
    expect(spans.map((s) => [Number(s.dataset.startMs), Number(s.dataset.endMs)])).toEqual(
      labeled.map((s) => [s.start_ms, s.end_ms]),
    );
    for (const [i, span] of spans.entries()) {
      const left = (labeled[i].start_ms / analysis.duration_ms) * 100;
      const width = ((labeled[i].end_ms - labeled[i].start_ms) / analysis.duration_ms) * 100;
      expect(parseFloat(span.style.left)).toBeCloseTo(left, 6);
      expect(parseFloat(span.style.width)).toBeCloseTo(width, 6);
    }
  });

  it("renders spans for a live analysis document", () => {
    renderProgressLabels(track, FIX.cat_analysis);
    const labeled = FIX.cat_analysis.segments.filter((s) => s.tier !== "none");
    expect(track.querySelectorAll(".gap-span")).toHaveLength(labeled.length);
  });

  it("labeled spans never overlap (segments partition the timeline)", () => {
    renderProgressLabels(track, FIX.cat_analysis);
    const spans = Array.from(track.querySelectorAll<HTMLElement>(".gap-span"));
    const extents = spans
      .map((s) => [Number(s.dataset.startMs), Number(s.dataset.endMs)] as const)
      .sort((a, b) => a[0] - b[0]);
    for (let i = 1; i < extents.length; i++) {
      expect(extents[i][0]).toBeGreaterThanOrEqual(extents[i - 1][1]);
    }
  });

  it("an unlabeled analysis leaves the bar bare", () => {
    const bare: AnalysisDoc = {
      video_id: "v",
      duration_ms: 10_000,
      segments: [
        { start_ms: 0, end_ms: 10_000, score: 0.9, tier: "none", reasons: [], hints: [] },
      ],
    };
    renderProgressLabels(track, bare);
    expect(track.querySelectorAll(".gap-span")).toHaveLength(0);
  });

  it("re-rendering replaces spans instead of stacking them", () => {
    renderProgressLabels(track, FIX.eight_span_analysis);
    renderProgressLabels(track, FIX.eight_span_analysis);
    expect(track.querySelectorAll(".gap-span")).toHaveLength(8);
  });
});
