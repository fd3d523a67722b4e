/** Latest-wins request serializer.
 *
 * Filter mutations must apply one at a time per session, but rapid brushing
 * produces bursts; intermediate positions are obsolete the moment a newer one
 * exists. While a request is in flight only the newest submitted task is kept,
 * and every caller whose task was superseded settles with the result of the
 * task that actually ran last.
 */

export type Task<T> = () => Promise<T>;

interface Waiter<T> {
  resolve: (value: T) => void;
  reject: (error: unknown) => void;
}

export class LatestWinsQueue<T> {
  private inFlight = false;
  private pending: Task<T> | null = null;
  private waiters: Waiter<T>[] = [];

  /** Number of tasks dropped because a newer one replaced them. */
  dropped = 0;

  submit(task: Task<T>): Promise<T> {
    if (this.inFlight) {
      if (this.pending) this.dropped += 1;
      this.pending = task;
      return new Promise<T>((resolve, reject) => {
        this.waiters.push({ resolve, reject });
      });
    }
    this.inFlight = true;
    return task().finally(() => this.finish());
  }

  private finish(): void {
    this.inFlight = false;
    const next = this.pending;
    if (!next) return;
    this.pending = null;
    const waiters = this.waiters;
    this.waiters = [];
    const result = this.submit(next);
    for (const waiter of waiters) {
      result.then(waiter.resolve, waiter.reject);
    }
  }
}
