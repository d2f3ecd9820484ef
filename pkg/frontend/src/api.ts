/** Thin typed client for the local analysis service. */

import type {
  AnalyzeRequest,
  AnalyzeResponse,
  CastEntry,
  CastPayload,
  RawWord,
  UnitInfo,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
  }
}

async function parseError(response: Response): Promise<ApiError> {
  let detail = `${response.status} ${response.statusText}`;
  try {
    const body = (await response.json()) as { detail?: unknown };
    if (typeof body.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body; keep the status line
  }
  return new ApiError(response.status, detail);
}

export class ApiClient {
  constructor(readonly base: string) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.base + path, {
      headers: { "Content-Type": "application/json" },
      ...init,
    });
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("/health");
  }

  units(): Promise<UnitInfo[]> {
    return this.request("/corpus/units");
  }

  rawWords(minLen: number, capitalized: boolean, minCount: number): Promise<RawWord[]> {
    const params = new URLSearchParams({
      minLen: String(minLen),
      capitalized: String(capitalized),
      minCount: String(minCount),
    });
    return this.request(`/rawwords?${params}`);
  }

  getCast(): Promise<CastPayload> {
    return this.request("/cast");
  }

  putCast(entries: CastEntry[], ifVersion?: number): Promise<{ version: number }> {
    return this.request("/cast", {
      method: "PUT",
      body: JSON.stringify({ entries, ifVersion: ifVersion ?? null }),
    });
  }

  analyze(req: AnalyzeRequest): Promise<AnalyzeResponse> {
    return this.request("/analyze", { method: "POST", body: JSON.stringify(req) });
  }

  saveCast(path?: string): Promise<{ path: string; version: number }> {
    return this.request("/cast/save", {
      method: "POST",
      body: JSON.stringify({ path: path ?? null }),
    });
  }
}
