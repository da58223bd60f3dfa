/** Trailing-edge debounce with an injectable scheduler (testable without timers). */
const realTimers = {
    set: (fn, ms) => setTimeout(fn, ms),
    clear: (handle) => clearTimeout(handle),
};
export function debounce(fn, ms, scheduler = realTimers) {
    let handle = null;
    return (...args) => {
        if (handle !== null)
            scheduler.clear(handle);
        handle = scheduler.set(() => {
            handle = null;
            fn(...args);
        }, ms);
    };
}
