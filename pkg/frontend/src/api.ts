/** Wire types and the HTTP client. The UI computes no quality judgements
 * itself: every label, score, and feedback string comes from the service. */

export interface FeedbackItem {
  explainerId: number;
  name: string;
  score: number;
  text: string;
}

export interface SegmentFeedback {
  startChar: number;
  endChar: number;
  label: string;
  confidence: number;
  lowQuality: boolean;
  feedback: FeedbackItem[];
}

export interface FeedbackReport {
  docQuality: { label: string; confidence: number; lowQuality: boolean };
  docFeedback: FeedbackItem[];
  segments: SegmentFeedback[];
  degenerate: boolean;
  diagnostics: string[];
}

export interface Violation {
  constraint: string;
  attributes: string[];
  values: unknown[];
  generic: string;
  custom: string | null;
}

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async post<T>(path: string, payload: unknown): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      const detail = (body as { error?: string }).error ?? response.statusText;
      throw new ApiError(detail, response.status);
    }
    return body as T;
  }

  getFeedback(corpus: string, text: string): Promise<FeedbackReport> {
    return this.post<FeedbackReport>("/feedback", { corpus, text });
  }

  async validate(table: string, record: Record<string, unknown>): Promise<Violation[]> {
    const body = await this.post<{ violations: Violation[] }>("/validate", { table, record });
    return body.violations;
  }

  async catalogMatches(table: string, prefix: string): Promise<string[]> {
    const response = await this.fetchFn(
      `${this.baseUrl}/catalog/${encodeURIComponent(table)}?prefix=${encodeURIComponent(prefix)}`,
    );
    if (!response.ok) throw new ApiError(response.statusText, response.status);
    const body = (await response.json()) as { matches: string[] };
    return body.matches;
  }
}
