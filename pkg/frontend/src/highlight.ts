/** Highlight rendering: low-quality segments become <mark> spans over an
 * overlay that mirrors the textarea content. Highlights derive solely from
 * the report's offsets; any mismatch with the current draft renders nothing. */

import type { FeedbackItem, FeedbackReport } from "./api.js";
import { rangesValid, sliceCodePoints, codePointLength } from "./offsets.js";

export interface HighlightSpan {
  startChar: number;
  endChar: number;
  items: FeedbackItem[];
}

export function lowQualitySpans(report: FeedbackReport): HighlightSpan[] {
  return report.segments
    .filter((s) => s.lowQuality)
    .map((s) => ({ startChar: s.startChar, endChar: s.endChar, items: s.feedback }))
    .sort((a, b) => a.startChar - b.startChar);
}

export function reportMatchesDraft(text: string, report: FeedbackReport): boolean {
  const n = codePointLength(text);
  return (
    report.segments.every((s) => s.startChar >= 0 && s.endChar <= n) &&
    rangesValid(text, report.segments)
  );
}

/** Build the overlay children for a draft plus its report.
 *
 * Returns null when the report's offsets no longer fit the draft (text was
 * edited since the report); the caller shows the recompute banner instead.
 */
export function renderHighlights(
  doc: Document,
  text: string,
  report: FeedbackReport,
): DocumentFragment | null {
  if (!reportMatchesDraft(text, report)) return null;
  const spans = lowQualitySpans(report);
  if (!rangesValid(text, spans)) return null;
  const fragment = doc.createDocumentFragment();
  let cursor = 0;
  for (const span of spans) {
    if (span.startChar > cursor) {
      fragment.append(doc.createTextNode(sliceCodePoints(text, cursor, span.startChar)));
    }
    const mark = doc.createElement("mark");
    mark.className = "low-quality";
    mark.textContent = sliceCodePoints(text, span.startChar, span.endChar);
    mark.dataset.startChar = String(span.startChar);
    mark.dataset.endChar = String(span.endChar);
    mark.dataset.feedback = JSON.stringify(span.items.map((i) => i.text));
    fragment.append(mark);
    cursor = span.endChar;
  }
  const total = codePointLength(text);
  if (cursor < total) {
    fragment.append(doc.createTextNode(sliceCodePoints(text, cursor, total)));
  }
  return fragment;
}

export function attachTooltip(doc: Document, overlay: HTMLElement, tooltip: HTMLElement): void {
  overlay.addEventListener("mouseover", (event) => {
    const target = event.target as HTMLElement;
    if (target.tagName !== "MARK") return;
    const texts = JSON.parse(target.dataset.feedback ?? "[]") as string[];
    tooltip.replaceChildren();
    for (const text of texts) {
      const line = doc.createElement("div");
      line.className = "tooltip-line";
      line.textContent = text;
      tooltip.append(line);
    }
    tooltip.hidden = texts.length === 0;
  });
  overlay.addEventListener("mouseout", () => {
    tooltip.hidden = true;
  });
}
