// Canvas painter for a built scene. Pure consumer: everything it
// draws comes out of the scene object.

import type { Scene, SceneNode } from "./scene.js";

const EDGE_COLOR = "#a8a8a8";
const LABEL_FONT = "13px system-ui, sans-serif";
const ATTRIBUTE_COLOR = "#1f4e8c";
const OBJECT_COLOR = "#333333";
const HANDLE_COLOR = "#1f4e8c";

function drawLabels(ctx: CanvasRenderingContext2D, node: SceneNode) {
    ctx.font = LABEL_FONT;
    ctx.textAlign = "center";
    if (node.attributeLabels.length > 0) {
        ctx.fillStyle = ATTRIBUTE_COLOR;
        ctx.textBaseline = "bottom";
        ctx.fillText(node.attributeLabels.join(", "),
                     node.x, node.y - node.radius - 4);
    }
    if (node.objectLabels.length > 0) {
        ctx.fillStyle = OBJECT_COLOR;
        ctx.textBaseline = "top";
        ctx.fillText(node.objectLabels.join(", "),
                     node.x, node.y + node.radius + 4);
    }
}

export function paint(ctx: CanvasRenderingContext2D, scene: Scene,
                      width: number, height: number): void {
    ctx.clearRect(0, 0, width, height);

    ctx.strokeStyle = EDGE_COLOR;
    ctx.lineWidth = 1.25;
    for (const edge of scene.edges) {
        ctx.beginPath();
        ctx.moveTo(edge.x1, edge.y1);
        ctx.lineTo(edge.x2, edge.y2);
        ctx.stroke();
    }

    for (const node of scene.nodes) {
        ctx.beginPath();
        ctx.arc(node.x, node.y, node.radius, 0, 2 * Math.PI);
        ctx.fillStyle = node.fill;
        ctx.fill();
        ctx.lineWidth = node.highlighted ? 2.5 : 1.5;
        ctx.strokeStyle = node.stroke;
        ctx.stroke();
    }

    // Small square on nodes whose attribute label can be dragged.
    ctx.fillStyle = HANDLE_COLOR;
    for (const handle of scene.handles) {
        if (!handle.enabled) continue;
        ctx.fillRect(handle.x - 3, handle.y - 3, 6, 6);
    }

    for (const node of scene.nodes) {
        drawLabels(ctx, node);
    }
}
