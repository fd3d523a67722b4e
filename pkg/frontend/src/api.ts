/** Thin typed client for the dashboard HTTP API. */

import type {
  AppListing,
  Cluster,
  FilterSpec,
  SessionDoc,
  StatePayload,
  TablePage,
  TermCount,
} from "./types";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

export class SessionExpired extends ApiError {
  constructor() {
    super(410, "session expired");
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class Api {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(url: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.base + url, init);
    if (response.status === 410) throw new SessionExpired();
    if (!response.ok) throw new ApiError(response.status, await response.text());
    return (await response.json()) as T;
  }

  listApps(): Promise<{ apps: AppListing[] }> {
    return this.request("/apps");
  }

  openSession(app: string): Promise<SessionDoc> {
    return this.request(`/apps/${encodeURIComponent(app)}/sessions`, {
      method: "POST",
    });
  }

  setFilter(session: string, dim: string, spec: FilterSpec): Promise<StatePayload> {
    return this.request(`/sessions/${session}/filters/${encodeURIComponent(dim)}`, {
      method: "PUT",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(spec),
    });
  }

  clearFilter(session: string, dim: string): Promise<StatePayload> {
    return this.request(`/sessions/${session}/filters/${encodeURIComponent(dim)}`, {
      method: "DELETE",
    });
  }

  resetAll(session: string): Promise<StatePayload> {
    return this.request(`/sessions/${session}/filters`, { method: "DELETE" });
  }

  getState(session: string): Promise<StatePayload> {
    return this.request(`/sessions/${session}/state`);
  }

  getTable(
    session: string,
    params: {
      offset?: number;
      limit?: number;
      sort?: string;
      dir?: "asc" | "desc";
      search?: string;
    },
  ): Promise<TablePage> {
    const query = new URLSearchParams();
    if (params.offset !== undefined) query.set("offset", String(params.offset));
    if (params.limit !== undefined) query.set("limit", String(params.limit));
    if (params.sort) query.set("sort", params.sort);
    if (params.dir) query.set("dir", params.dir);
    if (params.search) query.set("search", params.search);
    return this.request(`/sessions/${session}/table?${query}`);
  }

  getClusters(
    session: string,
    zoom: number,
    bbox?: string,
  ): Promise<{ zoom: number; clusters: Cluster[] }> {
    const query = new URLSearchParams({ zoom: String(zoom) });
    if (bbox) query.set("bbox", bbox);
    return this.request(`/sessions/${session}/clusters?${query}`);
  }

  getTerms(session: string, k: number): Promise<{ terms: TermCount[] }> {
    return this.request(`/sessions/${session}/terms?k=${k}`);
  }

  exportUrl(session: string): string {
    return `${this.base}/sessions/${session}/export.csv`;
  }
}
