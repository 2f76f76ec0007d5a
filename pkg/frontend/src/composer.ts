/** The write -> feedback -> revise loop.
 *
 * State rules: highlights derive solely from the last report's offsets, and
 * any edit clears the report (stale offsets never render). Only one feedback
 * request is in flight; responses to superseded requests are dropped. Network
 * failures keep the draft and show a retry banner.
 */

import { ApiClient, ApiError, FeedbackReport, Violation } from "./api.js";
import { renderHighlights } from "./highlight.js";

export type Phase = "writing" | "reviewing" | "submitted";

export interface ComposerElements {
  textarea: HTMLTextAreaElement;
  overlay: HTMLElement;
  docPanel: HTMLElement;
  banner: HTMLElement;
  fieldErrors: HTMLElement;
}

export class Composer {
  phase: Phase = "writing";
  lastReport: FeedbackReport | null = null;
  private seq = 0;

  constructor(
    private readonly doc: Document,
    private readonly api: ApiClient,
    private readonly corpus: string,
    readonly el: ComposerElements,
  ) {
    el.textarea.addEventListener("input", () => this.onEdit());
  }

  get draft(): string {
    return this.el.textarea.value;
  }

  /** Editing invalidates the report: clear highlights, prompt a recompute. */
  onEdit(): void {
    if (this.lastReport !== null) {
      this.lastReport = null;
      this.el.overlay.replaceChildren();
      this.el.docPanel.replaceChildren();
      this.showBanner("Text changed - press Recompute Text Feedback to refresh.");
    }
    if (this.phase === "reviewing") this.phase = "writing";
  }

  showBanner(message: string): void {
    this.el.banner.textContent = message;
    this.el.banner.hidden = false;
  }

  clearBanner(): void {
    this.el.banner.hidden = true;
    this.el.banner.textContent = "";
  }

  /** "I'm Done Writing" and "Recompute Text Feedback" both land here. */
  async requestFeedback(): Promise<FeedbackReport | null> {
    const ticket = ++this.seq;
    const draft = this.draft;
    let report: FeedbackReport;
    try {
      report = await this.api.getFeedback(this.corpus, draft);
    } catch (error) {
      if (ticket === this.seq) {
        const detail = error instanceof ApiError ? error.message : "network failure";
        this.showBanner(`Could not fetch feedback (${detail}) - your draft is preserved. Retry?`);
      }
      return null;
    }
    if (ticket !== this.seq || draft !== this.draft) return null; // superseded
    this.clearBanner();
    this.lastReport = report;
    this.phase = "reviewing";
    this.render(report);
    return report;
  }

  private render(report: FeedbackReport): void {
    const doc = this.doc;
    this.el.docPanel.replaceChildren();
    const quality = doc.createElement("div");
    quality.className = "doc-quality";
    quality.textContent = report.degenerate
      ? "Nothing to review yet."
      : `Overall: ${report.docQuality.label} (confidence ${report.docQuality.confidence.toFixed(2)})`;
    this.el.docPanel.append(quality);
    if (report.docFeedback.length === 0 && !report.segments.some((s) => s.feedback.length)) {
      const ok = doc.createElement("div");
      ok.className = "no-issues";
      ok.textContent = "No issues detected.";
      this.el.docPanel.append(ok);
    }
    for (const item of report.docFeedback) {
      const line = doc.createElement("div");
      line.className = "doc-feedback-item";
      line.textContent = item.text;
      this.el.docPanel.append(line);
    }
    const fragment = renderHighlights(doc, this.draft, report);
    if (fragment === null) {
      this.el.overlay.replaceChildren();
      this.showBanner("Feedback is out of date - press Recompute Text Feedback.");
      return;
    }
    this.el.overlay.replaceChildren(fragment);
  }

  /** Submit: validate the structured record plus the final text. */
  async submit(record: Record<string, unknown>): Promise<Violation[] | null> {
    let violations: Violation[];
    try {
      violations = await this.api.validate("reviews", { ...record, review: this.draft });
    } catch (error) {
      const detail = error instanceof ApiError ? error.message : "network failure";
      this.showBanner(`Could not submit (${detail}) - your draft is preserved. Retry?`);
      return null;
    }
    this.el.fieldErrors.replaceChildren();
    if (violations.length === 0) {
      this.phase = "submitted";
      return [];
    }
    for (const violation of violations) {
      const line = this.doc.createElement("div");
      line.className = "field-error";
      line.dataset.constraint = violation.constraint;
      line.textContent = violation.custom ?? violation.generic;
      this.el.fieldErrors.append(line);
    }
    return violations;
  }
}
