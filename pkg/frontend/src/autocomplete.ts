/** Catalog-backed autocomplete: typing a prefix lists existing entries
 * (matched case-insensitively by the service), steering input toward values
 * that satisfy the reference constraint. */

import type { ApiClient } from "./api.js";

export class Autocomplete {
  readonly element: HTMLElement;
  readonly input: HTMLInputElement;
  private readonly list: HTMLUListElement;
  private seq = 0;

  constructor(
    doc: Document,
    private readonly api: ApiClient,
    private readonly table: string,
    placeholder: string,
  ) {
    this.element = doc.createElement("div");
    this.element.className = "autocomplete";
    this.input = doc.createElement("input");
    this.input.type = "text";
    this.input.placeholder = placeholder;
    this.list = doc.createElement("ul");
    this.list.className = "autocomplete-list";
    this.list.hidden = true;
    this.element.append(this.input, this.list);
    this.input.addEventListener("input", () => {
      void this.refresh(doc);
    });
  }

  async refresh(doc: Document): Promise<void> {
    const prefix = this.input.value;
    const ticket = ++this.seq;
    if (!prefix) {
      this.list.hidden = true;
      this.list.replaceChildren();
      return;
    }
    let matches: string[] = [];
    try {
      matches = await this.api.catalogMatches(this.table, prefix);
    } catch {
      matches = [];
    }
    if (ticket !== this.seq) return; // a newer keystroke superseded this one
    this.list.replaceChildren();
    for (const match of matches) {
      const item = doc.createElement("li");
      item.textContent = match;
      item.addEventListener("click", () => {
        this.input.value = match;
        this.list.hidden = true;
      });
      this.list.append(item);
    }
    this.list.hidden = matches.length === 0;
  }

  value(): string {
    return this.input.value;
  }
}
