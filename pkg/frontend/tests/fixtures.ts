// Server-shaped documents for a 2x2 table before and after inserting
// a column d = {g2}, captured verbatim from a live session. The
// insert leaves seed a untouched and marks the two new nodes
// "generated"; the two pre-existing nodes come back "old".

import type { ChangeSet, DiagramDocument } from "../src/types.js";

export const k2Document: DiagramDocument = {
    version: 0,
    nodes: [
        { id: 0, extent: ["g1", "g2"], intent: ["b"], pos: [0.0, 0.0],
          objectLabels: ["g2"], attributeLabels: ["b"], changeClass: null },
        { id: 1, extent: ["g1"], intent: ["a", "b"], pos: [0.0, -1.0],
          objectLabels: ["g1"], attributeLabels: ["a"], changeClass: null },
    ],
    edges: [[1, 0]],
    seeds: { a: [0.0, -1.0] },
    upArrows: [["g2", "a"]],
    downArrows: [["g2", "a"]],
};

export const k2dDocument: DiagramDocument = {
    version: 1,
    nodes: [
        { id: 0, extent: ["g1", "g2"], intent: ["b"], pos: [0.0, 0.0],
          objectLabels: [], attributeLabels: ["b"], changeClass: "old" },
        { id: 1, extent: ["g1"], intent: ["a", "b"], pos: [0.0, -1.0],
          objectLabels: ["g1"], attributeLabels: ["a"], changeClass: "old" },
        { id: 2, extent: ["g2"], intent: ["b", "d"], pos: [1.0, -1.0],
          objectLabels: ["g2"], attributeLabels: ["d"], changeClass: "generated" },
        { id: 3, extent: [], intent: ["a", "b", "d"], pos: [1.0, -2.0],
          objectLabels: [], attributeLabels: [], changeClass: "generated" },
    ],
    edges: [[1, 0], [2, 0], [3, 1], [3, 2]],
    seeds: { a: [0.0, -1.0], d: [1.0, -1.0] },
    upArrows: [["g1", "d"], ["g2", "a"]],
    downArrows: [["g1", "d"], ["g2", "a"]],
};

export const k2dChangeset: ChangeSet = {
    direction: "insert",
    columnName: "d",
    columnExtent: ["g2"],
    preClass: { "0": "generating", "1": "generating" },
    created: { "0": 2, "1": 3 },
    retired: [],
    edgesAdded: [[2, 0], [3, 1], [3, 2]],
    edgesRemoved: [],
    gammaMoves: { g2: [0, 2] },
    muAdded: { d: 2 },
    muRemoved: {},
    seedsAdded: { d: [1.0, -1.0] },
    seedsRemoved: {},
    upAdded: [["g1", "d"]],
    upRemoved: [],
    downAdded: [["g1", "d"]],
    downRemoved: [],
    redundant: false,
};

export const emptyDocument: DiagramDocument = {
    version: 0,
    nodes: [],
    edges: [],
    seeds: {},
    upArrows: [],
    downArrows: [],
};

type Handler = (init: RequestInit | undefined) => {
    status: number;
    body: unknown;
};

export interface RecordedCall {
    url: string;
    method: string;
    headers: Record<string, string>;
    body: string | null;
}

/** fetch stub: scripted responses plus a transcript of every request. */
export function stubFetch(script: Record<string, Handler | Handler[]>) {
    const calls: RecordedCall[] = [];
    const remaining = new Map<string, Handler[]>();
    for (const [key, handler] of Object.entries(script)) {
        remaining.set(key, Array.isArray(handler) ? [...handler] : [handler]);
    }
    const impl = async (url: string, init?: RequestInit): Promise<Response> => {
        const method = init?.method ?? "GET";
        calls.push({
            url,
            method,
            headers: Object.fromEntries(
                Object.entries((init?.headers ?? {}) as Record<string, string>)),
            body: typeof init?.body === "string" ? init.body : null,
        });
        const key = `${method} ${new URL(url, "http://x").pathname}`;
        const queue = remaining.get(key);
        const handler = queue?.length === 1 ? queue[0] : queue?.shift();
        if (!handler) throw new Error(`unscripted request: ${key}`);
        const { status, body } = handler(init);
        return new Response(JSON.stringify(body), {
            status,
            headers: { "Content-Type": "application/json" },
        });
    };
    return { impl, calls };
}
