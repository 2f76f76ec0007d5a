import { describe, expect, it } from "vitest";

import { codePointLength, rangesValid, sliceCodePoints } from "../src/offsets.js";

describe("code point offsets", () => {
  it("slices plain ASCII like String.slice", () => {
    expect(sliceCodePoints("hello world", 6, 11)).toBe("world");
  });

  it("treats astral characters as single units", () => {
    const text = "a\u{1F600}b"; // 3 code points, 4 UTF-16 units
    expect(codePointLength(text)).toBe(3);
    expect(sliceCodePoints(text, 1, 2)).toBe("\u{1F600}");
    expect(sliceCodePoints(text, 2, 3)).toBe("b");
  });

  it("round-trips adjacent slices into the original text", () => {
    const text = "café \u{1F600} résumé!";
    const n = codePointLength(text);
    const mid = 4;
    expect(sliceCodePoints(text, 0, mid) + sliceCodePoints(text, mid, n)).toBe(text);
  });

  it("accepts tiling ranges and rejects overlap or overflow", () => {
    const text = "0123456789";
    expect(rangesValid(text, [{ startChar: 0, endChar: 4 }, { startChar: 4, endChar: 10 }])).toBe(true);
    expect(rangesValid(text, [{ startChar: 0, endChar: 5 }, { startChar: 4, endChar: 9 }])).toBe(false);
    expect(rangesValid(text, [{ startChar: 0, endChar: 11 }])).toBe(false);
    expect(rangesValid(text, [{ startChar: 3, endChar: 2 }])).toBe(false);
  });
});
