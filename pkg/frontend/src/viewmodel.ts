/** Session state: one StatePayload drives every component render. */

import { Api, SessionExpired } from "./api";
import { LatestWinsQueue } from "./queue";
import type { ConfigSummary, FilterSpec, StatePayload } from "./types";

export type Listener = (state: StatePayload) => void;

export class ViewModel {
  private session = "";
  private state: StatePayload | null = null;
  private initial: StatePayload | null = null;
  private listeners: Listener[] = [];
  private readonly mutations = new LatestWinsQueue<StatePayload>();

  config: ConfigSummary | null = null;

  constructor(
    private readonly api: Api,
    private readonly appName: string,
  ) {}

  async open(): Promise<StatePayload> {
    const doc = await this.api.openSession(this.appName);
    this.session = doc.session;
    this.config = doc.config;
    this.state = doc.state;
    this.initial = doc.state;
    return doc.state;
  }

  get sessionId(): string {
    return this.session;
  }

  get current(): StatePayload {
    if (!this.state) throw new Error("session not opened");
    return this.state;
  }

  get initialState(): StatePayload {
    if (!this.initial) throw new Error("session not opened");
    return this.initial;
  }

  activeFilter(dim: string): FilterSpec | undefined {
    return this.current.filters[dim];
  }

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  private publish(state: StatePayload): StatePayload {
    this.state = state;
    for (const listener of this.listeners) listener(state);
    return state;
  }

  /** Every user interaction maps to exactly one of these three mutations. */

  setFilter(dim: string, spec: FilterSpec): Promise<StatePayload> {
    return this.mutate(() => this.api.setFilter(this.session, dim, spec));
  }

  clearFilter(dim: string): Promise<StatePayload> {
    return this.mutate(() => this.api.clearFilter(this.session, dim));
  }

  resetAll(): Promise<StatePayload> {
    return this.mutate(() => this.api.resetAll(this.session));
  }

  private async mutate(task: () => Promise<StatePayload>): Promise<StatePayload> {
    try {
      const state = await this.mutations.submit(task);
      return this.publish(state);
    } catch (error) {
      if (error instanceof SessionExpired) {
        // server forgot us; re-create the session and start clean
        const state = await this.open();
        return this.publish(state);
      }
      throw error;
    }
  }

  /** Read-only queries; these bypass the mutation queue. */

  getTable(params: Parameters<Api["getTable"]>[1]): ReturnType<Api["getTable"]> {
    return this.api.getTable(this.session, params);
  }

  getClusters(zoom: number, bbox?: string): ReturnType<Api["getClusters"]> {
    return this.api.getClusters(this.session, zoom, bbox);
  }

  exportUrl(): string {
    return this.api.exportUrl(this.session);
  }
}
