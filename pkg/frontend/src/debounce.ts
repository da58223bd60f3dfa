/** Trailing-edge debounce with an injectable scheduler (testable without timers). */

export interface Scheduler {
  set(fn: () => void, ms: number): unknown;
  clear(handle: unknown): void;
}

const realTimers: Scheduler = {
  set: (fn, ms) => setTimeout(fn, ms),
  clear: (handle) => clearTimeout(handle as ReturnType<typeof setTimeout>),
};

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  ms: number,
  scheduler: Scheduler = realTimers,
): (...args: A) => void {
  let handle: unknown = null;
  return (...args: A) => {
    if (handle !== null) scheduler.clear(handle);
    handle = scheduler.set(() => {
      handle = null;
      fn(...args);
    }, ms);
  };
}
