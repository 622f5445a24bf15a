/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const alexander: (a: number, b: number) => [number, number];
export const blanchfield_gram: (a: number, b: number) => [number, number];
export const builtin_diagram: (a: number, b: number) => [number, number];
export const quandle_colorings: (a: number, b: number, c: number, d: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
