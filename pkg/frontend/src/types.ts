// Wire types for the diagram service. The server is the single source
// of truth; nothing here is computed client-side.

export type ChangeClass = "old" | "varied" | "generated" | null;

export interface DiagramNode {
    id: number;
    extent: string[];
    intent: string[];
    pos: [number, number];
    objectLabels: string[];
    attributeLabels: string[];
    changeClass: ChangeClass;
}

export interface DiagramDocument {
    version: number;
    nodes: DiagramNode[];
    edges: [number, number][];
    seeds: Record<string, [number, number]>;
    upArrows: [string, string][];
    downArrows: [string, string][];
}

// The changeset is carried along for clients that animate deltas; the
// editor itself swaps in the returned document wholesale.
export interface ChangeSet {
    direction: "insert" | "remove";
    columnName: string;
    columnExtent: string[];
    preClass: Record<string, string>;
    created: Record<string, number>;
    retired: number[];
    edgesAdded: [number, number][];
    edgesRemoved: [number, number][];
    gammaMoves: Record<string, [number, number]>;
    muAdded: Record<string, number>;
    muRemoved: Record<string, number>;
    seedsAdded: Record<string, [number, number]>;
    seedsRemoved: Record<string, [number, number]>;
    upAdded: [string, string][];
    upRemoved: [string, string][];
    downAdded: [string, string][];
    downRemoved: [string, string][];
    redundant: boolean;
}

export interface DiagramResponse {
    document: DiagramDocument;
    version: number;
}

export interface SessionResponse extends DiagramResponse {
    id: string;
}

export interface MutationResponse extends DiagramResponse {
    changeset: ChangeSet;
}
