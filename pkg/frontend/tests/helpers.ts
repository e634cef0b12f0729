// Shared test scaffolding: a canned fetch that answers with the exact
// JSON bodies the service documents for the small reference dataset,
// a deferred fetch for response-ordering tests, and DOM helpers.

import type { FetchLike, ResponseLike } from "../src/api.js";

export type Stub = { status: number; body: unknown };

// Reference dataset (two regions, three provinces, five districts):
//   01 Alpha / 0101 Alpha Norte / 010101 Pampas, 010102 San Juan
//              0102 Alpha Sur   / 010201 San Juan
//   02 Beta  / 0201 Beta Centro / 020101 Pampas Verdes
export const STUBS: Record<string, Stub> = {
    "/levels": {
        status: 200,
        body: [
            { ordinal: 1, name: "region" },
            { ordinal: 2, name: "province" },
            { ordinal: 3, name: "district" },
        ],
    },
    "/children": {
        status: 200,
        body: [
            { code: "01", name: "Alpha" },
            { code: "02", name: "Beta" },
        ],
    },
    "/children?parent=01": {
        status: 200,
        body: [
            { code: "0101", name: "Alpha Norte" },
            { code: "0102", name: "Alpha Sur" },
        ],
    },
    "/children?parent=02": {
        status: 200,
        body: [{ code: "0201", name: "Beta Centro" }],
    },
    "/children?parent=0101": {
        status: 200,
        body: [
            { code: "010101", name: "Pampas" },
            { code: "010102", name: "San Juan" },
        ],
    },
    "/children?parent=0102": {
        status: 200,
        body: [{ code: "010201", name: "San Juan" }],
    },
    "/children?parent=0201": {
        status: 200,
        body: [{ code: "020101", name: "Pampas Verdes" }],
    },
    "/children?parent=xx": {
        status: 404,
        body: { http_status: 404, code: "UnknownCode", message: "unknown code: xx" },
    },
    "/search?q=pam&limit=10": {
        status: 200,
        body: [
            {
                code: "010101",
                name: "Pampas",
                match_class: "prefix",
                path: [
                    { level: 1, code: "01", name: "Alpha" },
                    { level: 2, code: "0101", name: "Alpha Norte" },
                    { level: 3, code: "010101", name: "Pampas" },
                ],
            },
            {
                code: "020101",
                name: "Pampas Verdes",
                match_class: "prefix",
                path: [
                    { level: 1, code: "02", name: "Beta" },
                    { level: 2, code: "0201", name: "Beta Centro" },
                    { level: 3, code: "020101", name: "Pampas Verdes" },
                ],
            },
        ],
    },
    "/search?q=pampas%20ver&limit=10": {
        status: 200,
        body: [
            {
                code: "020101",
                name: "Pampas Verdes",
                match_class: "prefix",
                path: [
                    { level: 1, code: "02", name: "Beta" },
                    { level: 2, code: "0201", name: "Beta Centro" },
                    { level: 3, code: "020101", name: "Pampas Verdes" },
                ],
            },
        ],
    },
    "/search?q=san%20juan&limit=10": {
        status: 200,
        body: [
            {
                code: "010102",
                name: "San Juan",
                match_class: "exact",
                path: [
                    { level: 1, code: "01", name: "Alpha" },
                    { level: 2, code: "0101", name: "Alpha Norte" },
                    { level: 3, code: "010102", name: "San Juan" },
                ],
            },
            {
                code: "010201",
                name: "San Juan",
                match_class: "exact",
                path: [
                    { level: 1, code: "01", name: "Alpha" },
                    { level: 2, code: "0102", name: "Alpha Sur" },
                    { level: 3, code: "010201", name: "San Juan" },
                ],
            },
        ],
    },
    "/search?q=zzz&limit=10": { status: 200, body: [] },
    "/resolve/010101": {
        status: 200,
        body: {
            levels: [
                { level: 1, code: "01", name: "Alpha" },
                { level: 2, code: "0101", name: "Alpha Norte" },
                { level: 3, code: "010101", name: "Pampas" },
            ],
        },
    },
    "/resolve/010102": {
        status: 200,
        body: {
            levels: [
                { level: 1, code: "01", name: "Alpha" },
                { level: 2, code: "0101", name: "Alpha Norte" },
                { level: 3, code: "010102", name: "San Juan" },
            ],
        },
    },
    "/resolve/010201": {
        status: 200,
        body: {
            levels: [
                { level: 1, code: "01", name: "Alpha" },
                { level: 2, code: "0102", name: "Alpha Sur" },
                { level: 3, code: "010201", name: "San Juan" },
            ],
        },
    },
    "/resolve/020101": {
        status: 200,
        body: {
            levels: [
                { level: 1, code: "02", name: "Beta" },
                { level: 2, code: "0201", name: "Beta Centro" },
                { level: 3, code: "020101", name: "Pampas Verdes" },
            ],
        },
    },
    "/resolve/0101": {
        status: 404,
        body: {
            http_status: 404,
            code: "NotLeaf",
            message: "code 0101 is not at the leaf level",
        },
    },
    "/resolve/999999": {
        status: 404,
        body: { http_status: 404, code: "UnknownCode", message: "unknown code: 999999" },
    },
};

export function makeResponse(stub: Stub): ResponseLike {
    return {
        ok: stub.status < 400,
        status: stub.status,
        json: () => Promise.resolve(stub.body),
    };
}

// Fetch stand-in that answers from STUBS and records every URL asked.
export function fixtureFetch(requested: string[] = []): FetchLike {
    return (url) => {
        requested.push(url);
        const stub = STUBS[url];
        if (stub === undefined) {
            return Promise.resolve(
                makeResponse({
                    status: 404,
                    body: {
                        http_status: 404,
                        code: "UnknownCode",
                        message: `no stub for ${url}`,
                    },
                }),
            );
        }
        return Promise.resolve(makeResponse(stub));
    };
}

export type DeferredCall = {
    url: string;
    respond: (stub: Stub) => void;
};

// Fetch stand-in whose responses are released by the test, in any
// order, so out-of-order delivery can be exercised deliberately.
export function deferredFetch(): { impl: FetchLike; calls: DeferredCall[] } {
    const calls: DeferredCall[] = [];
    const impl: FetchLike = (url) =>
        new Promise<ResponseLike>((resolve) => {
            calls.push({ url, respond: (stub) => resolve(makeResponse(stub)) });
        });
    return { impl, calls };
}

export async function flushAsync(): Promise<void> {
    for (let i = 0; i < 20; i += 1) {
        await Promise.resolve();
    }
}

export function typeText(input: HTMLInputElement, text: string): void {
    input.value = text;
    input.dispatchEvent(new Event("input"));
}

export function pickOption(select: HTMLSelectElement, code: string): void {
    select.value = code;
    select.dispatchEvent(new Event("change"));
}

export function pressKey(target: HTMLElement, key: string): void {
    target.dispatchEvent(new KeyboardEvent("keydown", { key }));
}
