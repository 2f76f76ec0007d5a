import type { FeedbackReport } from "../src/api.js";

/** Draft with an astral character so code-point vs UTF-16 indexing differs.
 * Offsets are code-point indices (the service convention), computed from the
 * parts so the fixture cannot drift from its own text. */
const PARTS = [
  "Battery screen keyboard charger port. ",
  "Bad bad bad!!! ",
  "Warranty shipping \u{1F600} refund store price.",
];

export const DRAFT = PARTS.join("");

const cp = (s: string) => Array.from(s).length;
const ENDS = PARTS.reduce<number[]>((acc, part) => {
  acc.push((acc[acc.length - 1] ?? 0) + cp(part));
  return acc;
}, []);

export const REPORT: FeedbackReport = {
  docQuality: { label: "low", confidence: 0.8, lowQuality: true },
  docFeedback: [
    { explainerId: 1, name: "notEnoughDetail", score: 1.2, text: "Try adding information about: ram, disk" },
  ],
  segments: [
    {
      startChar: 0,
      endChar: ENDS[0],
      label: "high",
      confidence: 0.9,
      lowQuality: false,
      feedback: [],
    },
    {
      startChar: ENDS[0],
      endChar: ENDS[1],
      label: "low",
      confidence: 0.75,
      lowQuality: true,
      feedback: [
        { explainerId: 4, name: "subjectivity", score: 0.9, text: "Please make your writing more balanced and neutral" },
      ],
    },
    {
      startChar: ENDS[1],
      endChar: ENDS[2],
      label: "low",
      confidence: 0.6,
      lowQuality: true,
      feedback: [
        { explainerId: 2, name: "offTopic", score: 0.7, text: "Try discussing some of these topics: battery/screen/keyboard" },
      ],
    },
  ],
  degenerate: false,
  diagnostics: [],
};

export const LOW_PARTS = [PARTS[1], PARTS[2]];
