import { ApiClient } from "./api.js";
import { Autocomplete } from "./autocomplete.js";
import { Composer } from "./composer.js";
import { attachTooltip } from "./highlight.js";
import { StarRating } from "./rating.js";

const CORPUS = new URLSearchParams(window.location.search).get("corpus") ?? "laptops";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

export function boot(): void {
  const api = new ApiClient("");
  const rating = new StarRating(document);
  byId("rating-slot").append(rating.element);
  const product = new Autocomplete(document, api, "products", "Product name");
  byId("product-slot").append(product.element);

  const composer = new Composer(document, api, CORPUS, {
    textarea: byId<HTMLTextAreaElement>("draft"),
    overlay: byId("overlay"),
    docPanel: byId("doc-panel"),
    banner: byId("banner"),
    fieldErrors: byId("field-errors"),
  });
  attachTooltip(document, byId("overlay"), byId("tooltip"));

  byId("done").addEventListener("click", () => void composer.requestFeedback());
  byId("recompute").addEventListener("click", () => void composer.requestFeedback());
  byId("submit").addEventListener("click", () => {
    void composer
      .submit({ product_id: product.value(), rating: rating.value() ?? 0 })
      .then((violations) => {
        if (violations && violations.length === 0) {
          byId("done").setAttribute("disabled", "true");
          byId("recompute").setAttribute("disabled", "true");
          byId("submit").setAttribute("disabled", "true");
          composer.showBanner("Submitted - thank you!");
        }
      });
  });

  // keep the overlay scroll-locked to the textarea
  const textarea = byId<HTMLTextAreaElement>("draft");
  const overlay = byId("overlay");
  textarea.addEventListener("scroll", () => {
    overlay.scrollTop = textarea.scrollTop;
    overlay.scrollLeft = textarea.scrollLeft;
  });
}

if (typeof document !== "undefined" && document.getElementById("draft")) {
  boot();
}
