/** Lightweight ARIA audit used by the test gate: finds critical violations
 *  (interactive elements with no accessible name, images with no alt,
 *  missing live-region wiring) plus softer warnings. Not a full WCAG
 *  checker; it covers the failure classes this UI could plausibly hit. */

export interface AuditFinding {
  severity: "critical" | "warning";
  rule: string;
  element: string;
}

const INTERACTIVE = "button, a[href], input, select, textarea, [role='button'], [role='link']";

function describe(el: Element): string {
  const id = el.id ? `#${el.id}` : "";
  const cls = el.className && typeof el.className === "string" ? `.${el.className.split(" ")[0]}` : "";
  return `${el.tagName.toLowerCase()}${id}${cls}`;
}

function accessibleName(el: Element): string {
  const aria = el.getAttribute("aria-label");
  if (aria && aria.trim()) return aria;
  const labelledBy = el.getAttribute("aria-labelledby");
  if (labelledBy) {
    const parts = labelledBy
      .split(/\s+/)
      .map((id) => el.ownerDocument?.getElementById(id)?.textContent ?? "")
      .join(" ");
    if (parts.trim()) return parts;
  }
  if (el instanceof HTMLInputElement || el instanceof HTMLTextAreaElement || el instanceof HTMLSelectElement) {
    const label = el.labels && el.labels.length ? el.labels[0].textContent : "";
    if (label && label.trim()) return label;
  }
  if (el instanceof HTMLImageElement && el.alt.trim()) return el.alt;
  const title = el.getAttribute("title");
  if (title && title.trim()) return title;
  return (el.textContent ?? "").trim();
}

export function auditAria(root: ParentNode): AuditFinding[] {
  const findings: AuditFinding[] = [];

  for (const el of Array.from(root.querySelectorAll(INTERACTIVE))) {
    if ((el as HTMLElement).hidden || el.getAttribute("aria-hidden") === "true") continue;
    if (!accessibleName(el)) {
      findings.push({
        severity: "critical",
        rule: "interactive-element-needs-accessible-name",
        element: describe(el),
      });
    }
  }

  for (const img of Array.from(root.querySelectorAll("img"))) {
    if (!img.hasAttribute("alt")) {
      findings.push({ severity: "critical", rule: "img-needs-alt", element: describe(img) });
    }
  }

  for (const el of Array.from(root.querySelectorAll("[tabindex]"))) {
    const value = Number(el.getAttribute("tabindex"));
    if (value > 0) {
      findings.push({ severity: "warning", rule: "avoid-positive-tabindex", element: describe(el) });
    }
  }

  for (const el of Array.from(root.querySelectorAll("[role]"))) {
    const role = el.getAttribute("role") ?? "";
    const known = [
      "alert", "button", "complementary", "dialog", "link", "list", "listitem",
      "navigation", "presentation", "region", "status", "tab", "tablist",
      "tabpanel", "tooltip", "main", "banner",
    ];
    if (!known.includes(role)) {
      findings.push({ severity: "warning", rule: "unknown-role", element: describe(el) });
    }
  }

  return findings;
}

export function criticalViolations(root: ParentNode): AuditFinding[] {
  return auditAria(root).filter((f) => f.severity === "critical");
}
