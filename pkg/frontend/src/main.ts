// Page wiring: cross table on the left, diagram canvas on the right.
// The model owns all state; this file only translates DOM events into
// gestures and repaints from server documents.

import { ApiClient } from "./api.js";
import { EditorModel } from "./model.js";
import { buildScene, fitViewport, handleAt } from "./scene.js";
import type { Scene, Viewport } from "./scene.js";
import { paint } from "./paint.js";
import type { DiagramDocument } from "./types.js";

const SAMPLE_CXT = `B

2
2

g1
g2
a
b
XX
.X
`;

function el<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing element #${id}`);
    return node as T;
}

const canvas = el<HTMLCanvasElement>("diagram");
const ctx = canvas.getContext("2d")!;
const tableHost = el<HTMLDivElement>("crosstable");
const status = el<HTMLSpanElement>("status");
const cxtInput = el<HTMLTextAreaElement>("cxt");
const columnName = el<HTMLInputElement>("column-name");
const columnExtent = el<HTMLInputElement>("column-extent");

cxtInput.value = SAMPLE_CXT;

let view: Viewport | null = null;
let scene: Scene = { nodes: [], edges: [], handles: [] };

function say(text: string) {
    status.textContent = text;
}

function repaint(doc: DiagramDocument, version: number) {
    // The viewport is fixed when a session opens; edits must not
    // re-scale the picture, or unchanged nodes would drift.
    if (view === null) view = fitViewport(doc, canvas.width, canvas.height);
    scene = buildScene(doc, view);
    paint(ctx, scene, canvas.width, canvas.height);
    renderTable(doc);
    say(`version ${version}`);
}

const model = new EditorModel(
    new ApiClient(""),
    {
        onDocument: repaint,
        onConflict: message =>
            say(`concurrent edit (${message}); reloaded the latest diagram, retry`),
        onError: message => say(`error: ${message}`),
    });

function renderTable(doc: DiagramDocument) {
    const table = model.table();
    tableHost.replaceChildren();
    if (!table) return;
    const grid = document.createElement("table");

    const head = grid.insertRow();
    head.insertCell();
    for (const m of table.attributes) {
        const cell = head.insertCell();
        const button = document.createElement("button");
        button.textContent = `${m} ×`;
        button.title = `remove column ${m}`;
        button.addEventListener("click", () => {
            void model.toggleColumn(m, []);
        });
        cell.appendChild(button);
        if (m in doc.seeds) cell.classList.add("irreducible");
    }

    for (const g of table.objects) {
        const row = grid.insertRow();
        row.insertCell().textContent = g;
        const has = table.incidence.get(g) ?? new Set<string>();
        for (const m of table.attributes) {
            row.insertCell().textContent = has.has(m) ? "×" : "·";
        }
    }
    tableHost.appendChild(grid);
}

el<HTMLButtonElement>("create").addEventListener("click", () => {
    view = null;
    model.openSession(cxtInput.value).catch(err => say(`error: ${err.message}`));
});

el<HTMLButtonElement>("insert-column").addEventListener("click", () => {
    const name = columnName.value.trim();
    if (!name) {
        say("column name required");
        return;
    }
    const extent = columnExtent.value.split(",").map(s => s.trim()).filter(Boolean);
    void model.toggleColumn(name, extent);
    columnName.value = "";
    columnExtent.value = "";
});

el<HTMLButtonElement>("refit").addEventListener("click", () => {
    const doc = model.document;
    if (!doc) return;
    view = fitViewport(doc, canvas.width, canvas.height);
    repaint(doc, model.currentVersion);
});

// Seed dragging: grab an enabled handle, send one PUT on release.
let drag: { name: string; startX: number; startY: number } | null = null;

canvas.addEventListener("mousedown", event => {
    const rect = canvas.getBoundingClientRect();
    const x = event.clientX - rect.left;
    const y = event.clientY - rect.top;
    const handle = handleAt(scene, x, y);
    if (handle) drag = { name: handle.name, startX: x, startY: y };
});

canvas.addEventListener("mouseup", event => {
    if (!drag || !view) {
        drag = null;
        return;
    }
    const rect = canvas.getBoundingClientRect();
    const dx = (event.clientX - rect.left - drag.startX) / view.scale;
    const dy = -(event.clientY - rect.top - drag.startY) / view.scale;
    if (dx !== 0 || dy !== 0) void model.dragSeed(drag.name, [dx, dy]);
    drag = null;
});
