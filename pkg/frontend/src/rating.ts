/** Five-star rating widget. Only the integers 1..5 are representable, so a
 * rating domain violation cannot be constructed through this widget. */

export class StarRating {
  readonly element: HTMLElement;
  private current: number | null = null;
  private readonly buttons: HTMLButtonElement[] = [];

  constructor(doc: Document, onChange?: (value: number) => void) {
    this.element = doc.createElement("div");
    this.element.className = "star-rating";
    for (let value = 1; value <= 5; value += 1) {
      const button = doc.createElement("button");
      button.type = "button";
      button.className = "star";
      button.dataset.value = String(value);
      button.setAttribute("aria-label", `${value} star${value > 1 ? "s" : ""}`);
      button.textContent = "☆";
      button.addEventListener("click", () => {
        this.set(value);
        onChange?.(value);
      });
      this.buttons.push(button);
      this.element.append(button);
    }
  }

  /** Accepts only integers 1..5; anything else is ignored. */
  set(value: number): void {
    if (!Number.isInteger(value) || value < 1 || value > 5) return;
    this.current = value;
    this.buttons.forEach((b, i) => {
      b.textContent = i < value ? "★" : "☆";
      b.classList.toggle("selected", i < value);
    });
  }

  value(): number | null {
    return this.current;
  }
}
