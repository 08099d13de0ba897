/* tslint:disable */
/* eslint-disable */

/**
 * Face counts of the Voronoi cell of a graph given in the CLI's JSON format,
 * and whether its face poset matches the coherent acyclic orientations.
 */
export function face_summary(graph_json: string): string;

/**
 * Tiles containing the point under the cursor, as JSON.
 */
export function locate_point(lengths: string, twist: string, x: number, y: number): string;

/**
 * SVG of the tiling of the triangle graph; `lengths` and `twist` are three
 * comma-separated integers for the edges 01, 02, 12.
 */
export function render_tiling(lengths: string, twist: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly face_summary: (a: number, b: number) => [number, number, number, number];
    readonly locate_point: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly render_tiling: (a: number, b: number, c: number, d: number) => [number, number, number, number];
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
