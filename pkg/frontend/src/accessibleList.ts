/** The shared accessible-comment list panel: every curated comment, anchor
 *  order, visible on the page as a running record of contributions. */

import { formatTimestamp } from "./format.js";
import type { AccessibleComment } from "./types.js";

export function renderAccessibleList(container: HTMLElement, comments: AccessibleComment[]): void {
  container.textContent = "";
  const heading = document.createElement("h2");
  heading.textContent = "Accessible comments";
  const list = document.createElement("ol");
  list.setAttribute("aria-label", "Accessible comments");
  for (const comment of comments) {
    const item = document.createElement("li");
    item.dataset.commentId = comment.comment_id;
    const stamp = document.createElement("strong");
    stamp.textContent = formatTimestamp(comment.anchor_ms);
    const body = document.createElement("span");
    body.textContent = ` ${comment.text}`;
    item.append(stamp, body);
    list.appendChild(item);
  }
  if (!comments.length) {
    const empty = document.createElement("p");
    empty.textContent = "No accessible comments yet. Yours could be the first.";
    container.append(heading, empty);
    return;
  }
  container.append(heading, list);
}
