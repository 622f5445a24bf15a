/* tslint:disable */
/* eslint-disable */

/**
 * Alexander polynomial with its reciprocality certificate and roots.
 */
export function alexander(text: string): string;

/**
 * Blanchfield Gram matrix on the reduced coloring basis.
 */
export function blanchfield_gram(text: string): string;

/**
 * XRL text of a builtin diagram such as `trefoil` or `torus:2,5`.
 */
export function builtin_diagram(name: string): string;

/**
 * Colorings by the Alexander quandle `F_p` with `x ⊳ y = tx + (1 − t)y`,
 * counted by linear algebra and by enumeration.
 */
export function quandle_colorings(text: string, p: number, t: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly alexander: (a: number, b: number) => [number, number];
    readonly blanchfield_gram: (a: number, b: number) => [number, number];
    readonly builtin_diagram: (a: number, b: number) => [number, number];
    readonly quandle_colorings: (a: number, b: number, c: number, d: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
