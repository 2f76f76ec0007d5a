import { readFileSync } from "node:fs";
import { join, resolve } from "node:path";
import { beforeAll, describe, expect, it, vi } from "vitest";

import { REPORT } from "./fixtures.js";

function jsonResponse(payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status: 200,
    headers: { "content-type": "application/json" },
  });
}

describe("page boot", () => {
  beforeAll(() => {
    const html = readFileSync(join(resolve(__dirname, ".."), "index.html"), "utf-8");
    document.body.innerHTML = /<body>([\s\S]*)<\/body>/.exec(html)![1];
    vi.stubGlobal(
      "fetch",
      vi.fn(async (input: RequestInfo | URL) => {
        const url = String(input);
        if (url.includes("/feedback")) return jsonResponse(REPORT);
        if (url.includes("/validate")) return jsonResponse({ violations: [] });
        if (url.includes("/catalog/")) return jsonResponse({ matches: ["ThinkPad X1 Carbon"] });
        return jsonResponse({});
      }),
    );
  });

  it("wires widgets and buttons into the static page", async () => {
    await import("../src/main.js"); // auto-boots: #draft is present
    expect(document.querySelectorAll("#rating-slot button.star")).toHaveLength(5);
    expect(document.querySelector("#product-slot input")).not.toBeNull();
    const textarea = document.getElementById("draft") as HTMLTextAreaElement;
    textarea.value = "Some draft."; // report offsets will not match: banner path
    (document.getElementById("done") as HTMLButtonElement).click();
    await new Promise((r) => setTimeout(r, 20));
    expect((globalThis.fetch as ReturnType<typeof vi.fn>).mock.calls.length).toBeGreaterThan(0);
  });
});
