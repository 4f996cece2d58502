// Pure scene construction: a document plus a fixed viewport maps to
// screen-space primitives. No state is kept here, so a node whose
// diagram position did not change lands on exactly the same pixels.

import type { DiagramDocument, ChangeClass } from "./types.js";

export interface Viewport {
    originX: number;
    originY: number;
    scale: number;
}

export interface SceneNode {
    id: number;
    x: number;
    y: number;
    radius: number;
    fill: string;
    stroke: string;
    highlighted: boolean;
    attributeLabels: string[];  // drawn above the node
    objectLabels: string[];     // drawn below the node
}

export interface SceneEdge {
    x1: number;
    y1: number;
    x2: number;
    y2: number;
}

export interface SeedHandle {
    name: string;     // attribute whose seed this handle drags
    x: number;
    y: number;
    enabled: boolean; // false on reducible attributes: no seed to drag
}

export interface Scene {
    nodes: SceneNode[];
    edges: SceneEdge[];
    handles: SeedHandle[];
}

export const NODE_RADIUS = 7;

export const FILL_PLAIN = "#ffffff";
export const FILL_OLD = "#ffffff";
export const FILL_VARIED = "#f2c94c";
export const FILL_GENERATED = "#6fcf97";
export const STROKE_PLAIN = "#333333";
export const STROKE_HIGHLIGHT = "#1a7a3a";

function fillFor(changeClass: ChangeClass): string {
    switch (changeClass) {
        case "generated": return FILL_GENERATED;
        case "varied": return FILL_VARIED;
        case "old": return FILL_OLD;
        default: return FILL_PLAIN;
    }
}

/** Diagram coordinates grow upward; the canvas grows downward. */
export function toScreen(view: Viewport, pos: [number, number]): [number, number] {
    return [view.originX + view.scale * pos[0],
            view.originY + view.scale * -pos[1]];
}

export function buildScene(doc: DiagramDocument, view: Viewport): Scene {
    const screenOf = new Map<number, [number, number]>();
    const nodes: SceneNode[] = doc.nodes.map(node => {
        const [x, y] = toScreen(view, node.pos);
        screenOf.set(node.id, [x, y]);
        const highlighted = node.changeClass === "generated"
            || node.changeClass === "varied";
        return {
            id: node.id,
            x,
            y,
            radius: NODE_RADIUS,
            fill: fillFor(node.changeClass),
            stroke: highlighted ? STROKE_HIGHLIGHT : STROKE_PLAIN,
            highlighted,
            attributeLabels: [...node.attributeLabels],
            objectLabels: [...node.objectLabels],
        };
    });

    const edges: SceneEdge[] = [];
    for (const [lower, upper] of doc.edges) {
        const lo = screenOf.get(lower);
        const up = screenOf.get(upper);
        if (lo && up) {
            edges.push({ x1: lo[0], y1: lo[1], x2: up[0], y2: up[1] });
        }
    }

    // One drag handle per attribute label, live only when the
    // attribute actually owns a seed (is irreducible).
    const handles: SeedHandle[] = [];
    for (const node of doc.nodes) {
        const at = screenOf.get(node.id)!;
        for (const name of node.attributeLabels) {
            handles.push({
                name,
                x: at[0],
                y: at[1],
                enabled: name in doc.seeds,
            });
        }
    }
    return { nodes, edges, handles };
}

/** Fit the whole diagram into a box, with a fixed fallback for the
 *  degenerate single-point case. The viewport is computed once per
 *  session and then held constant, so later edits never re-scale. */
export function fitViewport(doc: DiagramDocument, width: number, height: number,
                            margin = 60): Viewport {
    if (doc.nodes.length === 0) {
        return { originX: width / 2, originY: margin, scale: 80 };
    }
    let minX = Infinity, maxX = -Infinity, minY = Infinity, maxY = -Infinity;
    for (const node of doc.nodes) {
        minX = Math.min(minX, node.pos[0]);
        maxX = Math.max(maxX, node.pos[0]);
        minY = Math.min(minY, node.pos[1]);
        maxY = Math.max(maxY, node.pos[1]);
    }
    const spanX = maxX - minX;
    const spanY = maxY - minY;
    const scale = spanX === 0 && spanY === 0
        ? 80
        : Math.min(
            spanX === 0 ? Infinity : (width - 2 * margin) / spanX,
            spanY === 0 ? Infinity : (height - 2 * margin) / spanY,
            120);
    return {
        originX: width / 2 - scale * (minX + maxX) / 2,
        originY: margin + scale * maxY,
        scale,
    };
}

export function handleAt(scene: Scene, x: number, y: number,
                         tolerance = 10): SeedHandle | null {
    for (const handle of scene.handles) {
        if (!handle.enabled) continue;
        const dx = handle.x - x;
        const dy = handle.y - y;
        if (dx * dx + dy * dy <= tolerance * tolerance) return handle;
    }
    return null;
}
