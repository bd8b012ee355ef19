/* tslint:disable */
/* eslint-disable */

/**
 * Right characteristic polynomial coefficients as JSON. `k` defaults to the
 * backend's Lie nilpotency index when it is known.
 */
export function char_poly(backend: string, matrix: string, k?: number | null): string;

/**
 * Symmetric determinant of a square matrix over the given backend.
 */
export function sdet(backend: string, matrix: string): string;

/**
 * Right Cayley-Hamilton check on random matrices; returns the JSON report.
 */
export function verify_ch(backend: string, n: number, k: number, seed: number, trials: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly char_poly: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly sdet: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly verify_ch: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
