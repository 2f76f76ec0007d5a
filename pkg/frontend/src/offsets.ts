/** Report offsets are Unicode code-point indices (the service counts scalar
 * values); JavaScript strings are UTF-16, so astral characters occupy two
 * units. All slicing at the editor boundary goes through these helpers. */

/** UTF-16 index of each code-point boundary; length = codePointCount + 1. */
export function codePointBoundaries(text: string): number[] {
  const bounds = [0];
  let i = 0;
  while (i < text.length) {
    const cp = text.codePointAt(i)!;
    i += cp > 0xffff ? 2 : 1;
    bounds.push(i);
  }
  return bounds;
}

export function codePointLength(text: string): number {
  return codePointBoundaries(text).length - 1;
}

/** Slice by code-point offsets, mirroring the service's indexing. */
export function sliceCodePoints(text: string, start: number, end: number): string {
  const bounds = codePointBoundaries(text);
  return text.slice(bounds[start], bounds[end]);
}

export interface Range {
  startChar: number;
  endChar: number;
}

/** Ranges must be in bounds, well ordered, and non-overlapping. */
export function rangesValid(text: string, ranges: Range[]): boolean {
  const n = codePointLength(text);
  let previousEnd = 0;
  const sorted = [...ranges].sort((a, b) => a.startChar - b.startChar);
  for (const r of sorted) {
    if (r.startChar < 0 || r.endChar > n || r.startChar > r.endChar) return false;
    if (r.startChar < previousEnd) return false;
    previousEnd = r.endChar;
  }
  return true;
}
