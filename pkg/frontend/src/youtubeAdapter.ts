/** Best-effort YouTube page adapter, behind a feature flag. Selector drift
 *  on the host page must never break the demo player or the tests, so this
 *  module is intentionally defensive and entirely optional. */

export const YOUTUBE_INJECTION_ENABLED = false;

interface HostBindings {
  video: HTMLVideoElement;
  progressBar: HTMLElement;
  commentBox: HTMLElement;
}

const SELECTORS = {
  video: "video.html5-main-video",
  progressBar: ".ytp-progress-bar",
  commentBox: "#placeholder-area, ytd-comment-simplebox-renderer",
};

export function findHostBindings(doc: Document = document): HostBindings | null {
  if (!YOUTUBE_INJECTION_ENABLED) return null;
  const video = doc.querySelector<HTMLVideoElement>(SELECTORS.video);
  const progressBar = doc.querySelector<HTMLElement>(SELECTORS.progressBar);
  const commentBox = doc.querySelector<HTMLElement>(SELECTORS.commentBox);
  if (!video || !progressBar || !commentBox) return null;
  return { video, progressBar, commentBox };
}

/** Mount a label track under the host progress bar; returns the container
 *  (caller renders into it) or null when the page shape is unrecognized. */
export function mountLabelTrack(doc: Document = document): HTMLElement | null {
  const bindings = findHostBindings(doc);
  if (!bindings) return null;
  const track = doc.createElement("div");
  track.className = "sightline-host-track";
  bindings.progressBar.insertAdjacentElement("afterend", track);
  return track;
}
