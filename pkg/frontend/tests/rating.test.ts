import { describe, expect, it } from "vitest";

import { StarRating } from "../src/rating.js";

describe("star rating widget", () => {
  it("only exposes values 1..5 via clicks", () => {
    const widget = new StarRating(document);
    const stars = Array.from(widget.element.querySelectorAll("button.star"));
    expect(stars).toHaveLength(5);
    for (const star of stars) {
      (star as HTMLButtonElement).click();
      const v = widget.value();
      expect(v).not.toBeNull();
      expect(Number.isInteger(v)).toBe(true);
      expect(v! >= 1 && v! <= 5).toBe(true);
    }
  });

  it("makes out-of-domain ratings unconstructible", () => {
    const widget = new StarRating(document);
    widget.set(3);
    for (const bad of [0, 6, 7, -1, 2.5, Number.NaN]) {
      widget.set(bad);
      expect(widget.value()).toBe(3);
    }
  });

  it("starts unset so the composer can require a choice", () => {
    expect(new StarRating(document).value()).toBeNull();
  });

  it("fills stars up to the selected value", () => {
    const widget = new StarRating(document);
    widget.set(4);
    const filled = widget.element.querySelectorAll("button.selected");
    expect(filled).toHaveLength(4);
  });
});
