// Typed client for the diagram service. Every method issues exactly
// one request; optimistic concurrency goes through If-Match.

import type { DiagramResponse, MutationResponse, SessionResponse } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
    constructor(readonly status: number, message: string) {
        super(message);
        this.name = "ApiError";
    }
}

export class ConflictError extends ApiError {
    constructor(readonly currentVersion: number | null, message: string) {
        super(409, message);
        this.name = "ConflictError";
    }
}

async function decode<T>(res: Response): Promise<T> {
    if (res.ok) {
        return res.json() as Promise<T>;
    }
    let message = `request failed with ${res.status}`;
    let currentVersion: number | null = null;
    try {
        const body = await res.json();
        if (typeof body.error === "string") message = body.error;
        if (typeof body.currentVersion === "number") currentVersion = body.currentVersion;
    } catch {
        // non-JSON error body; keep the status message
    }
    if (res.status === 409) throw new ConflictError(currentVersion, message);
    throw new ApiError(res.status, message);
}

function ifMatch(version?: number): Record<string, string> {
    return version === undefined ? {} : { "If-Match": `"${version}"` };
}

export class ApiClient {
    constructor(private readonly baseUrl: string,
                private readonly fetchImpl: FetchLike = (...args) => fetch(...args)) {}

    private url(path: string): string {
        return this.baseUrl.replace(/\/$/, "") + path;
    }

    /** New session from a CXT table (text/plain) or a document (application/json). */
    async createSession(body: string, contentType = "text/plain"): Promise<SessionResponse> {
        const res = await this.fetchImpl(this.url("/contexts"), {
            method: "POST",
            headers: { "Content-Type": contentType },
            body,
        });
        return decode<SessionResponse>(res);
    }

    async getDiagram(sessionId: string): Promise<DiagramResponse> {
        const res = await this.fetchImpl(this.url(`/contexts/${sessionId}/diagram`));
        return decode<DiagramResponse>(res);
    }

    async insertAttribute(sessionId: string, name: string, extent: string[],
                          version?: number): Promise<MutationResponse> {
        const res = await this.fetchImpl(this.url(`/contexts/${sessionId}/attributes`), {
            method: "POST",
            headers: { "Content-Type": "application/json", ...ifMatch(version) },
            body: JSON.stringify({ name, extent }),
        });
        return decode<MutationResponse>(res);
    }

    async removeAttribute(sessionId: string, name: string,
                          version?: number): Promise<MutationResponse> {
        const res = await this.fetchImpl(
            this.url(`/contexts/${sessionId}/attributes/${encodeURIComponent(name)}`),
            { method: "DELETE", headers: ifMatch(version) });
        return decode<MutationResponse>(res);
    }

    async putSeed(sessionId: string, name: string, pos: [number, number],
                  version?: number): Promise<DiagramResponse> {
        const res = await this.fetchImpl(
            this.url(`/contexts/${sessionId}/seeds/${encodeURIComponent(name)}`),
            {
                method: "PUT",
                headers: { "Content-Type": "application/json", ...ifMatch(version) },
                body: JSON.stringify(pos),
            });
        return decode<DiagramResponse>(res);
    }
}
