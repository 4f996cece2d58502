// Editor state machine. Holds nothing but the last server document;
// every gesture issues at most one mutation, gestures are serialized,
// and a version conflict rolls back to whatever the server has.

import { ApiClient, ConflictError } from "./api.js";
import type { DiagramDocument, DiagramResponse } from "./types.js";

export interface CrossTable {
    objects: string[];
    attributes: string[];
    incidence: Map<string, Set<string>>;  // object -> attributes it has
}

/** Rebuild the cross table a document encodes: objects come from the
 *  widest extent, attributes from the widest intent, and an object's
 *  row is the intent of the node carrying its label. */
export function tableOf(doc: DiagramDocument): CrossTable {
    let objects: string[] = [];
    let attributes: string[] = [];
    for (const node of doc.nodes) {
        if (node.extent.length >= objects.length) objects = node.extent;
        if (node.intent.length >= attributes.length) attributes = node.intent;
    }
    const incidence = new Map<string, Set<string>>();
    for (const g of objects) incidence.set(g, new Set());
    for (const node of doc.nodes) {
        for (const g of node.objectLabels) {
            incidence.set(g, new Set(node.intent));
        }
    }
    return { objects: [...objects], attributes: [...attributes], incidence };
}

export interface EditorEvents {
    onDocument?: (doc: DiagramDocument, version: number) => void;
    onConflict?: (message: string) => void;
    onError?: (message: string) => void;
}

export class EditorModel {
    private sessionId: string | null = null;
    private doc: DiagramDocument | null = null;
    private version = 0;
    private chain: Promise<void> = Promise.resolve();
    selectedAttribute: string | null = null;

    constructor(private readonly api: ApiClient,
                private readonly events: EditorEvents = {}) {}

    get document(): DiagramDocument | null {
        return this.doc;
    }

    get currentVersion(): number {
        return this.version;
    }

    get open(): boolean {
        return this.sessionId !== null;
    }

    table(): CrossTable | null {
        return this.doc ? tableOf(this.doc) : null;
    }

    hasAttribute(name: string): boolean {
        return this.doc !== null && tableOf(this.doc).attributes.includes(name);
    }

    async openSession(body: string, contentType = "text/plain"): Promise<void> {
        const res = await this.api.createSession(body, contentType);
        this.sessionId = res.id;
        this.accept(res);
    }

    /** Absent column: insert with the given extent. Present column:
     *  remove it. Exactly one mutation request either way. */
    toggleColumn(name: string, extent: string[]): Promise<void> {
        return this.enqueue(async () => {
            const sid = this.requireSession();
            const res = this.hasAttribute(name)
                ? await this.api.removeAttribute(sid, name, this.version)
                : await this.api.insertAttribute(sid, name, extent, this.version);
            this.accept(res);
        });
    }

    /** Move a seed by a diagram-space delta. Reducible attributes have
     *  no seed; the gesture is a disabled control, not an error. */
    dragSeed(name: string, delta: [number, number]): Promise<void> {
        return this.enqueue(async () => {
            const sid = this.requireSession();
            const seed = this.doc?.seeds[name];
            if (!seed) return;
            const target: [number, number] = [seed[0] + delta[0], seed[1] + delta[1]];
            this.accept(await this.api.putSeed(sid, name, target, this.version));
        });
    }

    /** Serialize gestures so a queued one sees the version its
     *  predecessor produced, and fold conflicts into a reload. */
    private enqueue(op: () => Promise<void>): Promise<void> {
        const run = this.chain.then(async () => {
            try {
                await op();
            } catch (err) {
                if (err instanceof ConflictError) {
                    await this.reload();
                    this.events.onConflict?.(err.message);
                    return;
                }
                this.events.onError?.(err instanceof Error ? err.message : String(err));
                throw err;
            }
        });
        this.chain = run.catch(() => undefined);
        return run;
    }

    private async reload(): Promise<void> {
        const sid = this.requireSession();
        this.accept(await this.api.getDiagram(sid));
    }

    private accept(res: DiagramResponse): void {
        this.doc = res.document;
        this.version = res.version;
        this.events.onDocument?.(res.document, res.version);
    }

    private requireSession(): string {
        if (this.sessionId === null) throw new Error("no open session");
        return this.sessionId;
    }
}
