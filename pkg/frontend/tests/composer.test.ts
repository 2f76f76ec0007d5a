import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { Composer } from "../src/composer.js";
import { DRAFT, REPORT } from "./fixtures.js";

function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "content-type": "application/json" },
  });
}

function buildComposer(fetchFn: typeof fetch) {
  const textarea = document.createElement("textarea");
  const overlay = document.createElement("div");
  const docPanel = document.createElement("div");
  const banner = document.createElement("div");
  banner.hidden = true;
  const fieldErrors = document.createElement("div");
  document.body.append(textarea, overlay, docPanel, banner, fieldErrors);
  const composer = new Composer(document, new ApiClient("", fetchFn), "laptops", {
    textarea,
    overlay,
    docPanel,
    banner,
    fieldErrors,
  });
  return { composer, textarea, overlay, docPanel, banner, fieldErrors };
}

describe("composer state machine", () => {
  it("renders feedback and enters the reviewing phase", async () => {
    const { composer, textarea, overlay, docPanel } = buildComposer(async () =>
      jsonResponse(REPORT),
    );
    textarea.value = DRAFT;
    const report = await composer.requestFeedback();
    expect(report).not.toBeNull();
    expect(composer.phase).toBe("reviewing");
    expect(overlay.querySelectorAll("mark.low-quality")).toHaveLength(2);
    expect(docPanel.textContent).toContain("Try adding information about");
  });

  it("clears highlights and prompts recompute when the text is edited", async () => {
    const { composer, textarea, overlay, banner } = buildComposer(async () =>
      jsonResponse(REPORT),
    );
    textarea.value = DRAFT;
    await composer.requestFeedback();
    expect(overlay.querySelectorAll("mark").length).toBeGreaterThan(0);
    textarea.value = DRAFT + " edited";
    textarea.dispatchEvent(new Event("input", { bubbles: true }));
    expect(composer.lastReport).toBeNull();
    expect(overlay.childNodes).toHaveLength(0);
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toContain("Recompute");
    expect(composer.phase).toBe("writing");
  });

  it("drops responses from superseded requests", async () => {
    let release: (() => void) | null = null;
    const slowFirst = new Promise<void>((resolve) => {
      release = resolve;
    });
    let call = 0;
    const { composer, textarea, overlay } = buildComposer(async () => {
      call += 1;
      if (call === 1) {
        await slowFirst;
        return jsonResponse({ ...REPORT, docFeedback: [] });
      }
      return jsonResponse(REPORT);
    });
    textarea.value = DRAFT;
    const first = composer.requestFeedback();
    const second = composer.requestFeedback();
    release!();
    const [r1, r2] = await Promise.all([first, second]);
    expect(r1).toBeNull(); // superseded by the second click
    expect(r2).not.toBeNull();
    expect(composer.lastReport).toEqual(REPORT);
    expect(overlay.querySelectorAll("mark")).toHaveLength(2);
  });

  it("keeps the draft and shows a retry banner on network failure", async () => {
    const { composer, textarea, banner } = buildComposer(async () => {
      throw new TypeError("fetch failed");
    });
    textarea.value = DRAFT;
    const report = await composer.requestFeedback();
    expect(report).toBeNull();
    expect(textarea.value).toBe(DRAFT);
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toContain("Retry");
  });

  it("renders violations inline and holds the writing phase", async () => {
    const violations = [
      {
        constraint: "reviews_product_id_fkey",
        attributes: ["product_id"],
        values: ["Unknown"],
        generic: "fkey violated",
        custom: "We could not find 'Unknown'; please pick an existing product_id",
      },
    ];
    const { composer, textarea, fieldErrors } = buildComposer(async (input) => {
      expect(String(input)).toContain("/validate");
      return jsonResponse({ violations });
    });
    textarea.value = DRAFT;
    const got = await composer.submit({ product_id: "Unknown", rating: 4 });
    expect(got).toHaveLength(1);
    expect(composer.phase).not.toBe("submitted");
    const lines = fieldErrors.querySelectorAll(".field-error");
    expect(lines).toHaveLength(1);
    expect(lines[0].textContent).toContain("please pick an existing");
  });

  it("reaches the submitted phase when validation passes", async () => {
    const { composer, textarea } = buildComposer(async (input) =>
      String(input).includes("/validate") ? jsonResponse({ violations: [] }) : jsonResponse(REPORT),
    );
    textarea.value = DRAFT;
    const got = await composer.submit({ product_id: "ThinkPad X1 Carbon", rating: 5 });
    expect(got).toEqual([]);
    expect(composer.phase).toBe("submitted");
  });
});

describe("reports with nothing to flag", () => {
  it("shows the no-issues panel and renders no highlights", async () => {
    const clean = {
      ...REPORT,
      docQuality: { label: "high", confidence: 0.95, lowQuality: false },
      docFeedback: [],
      segments: REPORT.segments.map((s) => ({ ...s, lowQuality: false, feedback: [] })),
    };
    const { composer, textarea, overlay, docPanel } = buildComposer(async () =>
      jsonResponse(clean),
    );
    textarea.value = DRAFT;
    await composer.requestFeedback();
    expect(overlay.querySelectorAll("mark")).toHaveLength(0);
    expect(docPanel.textContent).toContain("No issues detected.");
  });
});
