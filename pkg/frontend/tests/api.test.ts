import { describe, expect, it } from "vitest";

import { ApiError, GazetteerApi } from "../src/api.js";
import type { FetchLike } from "../src/api.js";
import { STUBS, fixtureFetch, makeResponse } from "./helpers.js";

describe("GazetteerApi url construction", () => {
    async function recordedUrls(run: (api: GazetteerApi) => Promise<unknown>) {
        const urls: string[] = [];
        const api = new GazetteerApi("", fixtureFetch(urls));
        await run(api);
        return urls;
    }

    it("asks the documented endpoints", async () => {
        expect(await recordedUrls((api) => api.levels())).toEqual(["/levels"]);
        expect(await recordedUrls((api) => api.children())).toEqual(["/children"]);
        expect(await recordedUrls((api) => api.children("01"))).toEqual([
            "/children?parent=01",
        ]);
        expect(await recordedUrls((api) => api.resolve("020101"))).toEqual([
            "/resolve/020101",
        ]);
    });

    it("url-encodes user text in query and path parameters", async () => {
        const urls: string[] = [];
        const api = new GazetteerApi("", fixtureFetch(urls));
        await api.search("san juan", 10);
        await api.search("a&b=c", 10).catch(() => undefined);
        await api.resolve("9/9").catch(() => undefined);
        expect(urls).toEqual([
            "/search?q=san%20juan&limit=10",
            "/search?q=a%26b%3Dc&limit=10",
            "/resolve/9%2F9",
        ]);
    });

    it("omits the limit parameter when not given", async () => {
        const urls: string[] = [];
        const api = new GazetteerApi("", fixtureFetch(urls));
        await api.search("zzz").catch(() => undefined);
        expect(urls).toEqual(["/search?q=zzz"]);
    });

    it("joins a base url without doubling slashes", async () => {
        const urls: string[] = [];
        const impl: FetchLike = (url) => {
            urls.push(url);
            return Promise.resolve(makeResponse(STUBS["/levels"]));
        };
        const api = new GazetteerApi("http://127.0.0.1:8000/", impl);
        await api.levels();
        expect(urls).toEqual(["http://127.0.0.1:8000/levels"]);
    });
});

describe("GazetteerApi bodies and errors", () => {
    it("returns parsed success bodies untouched", async () => {
        const api = new GazetteerApi("", fixtureFetch());
        expect(await api.levels()).toEqual(STUBS["/levels"].body);
        expect(await api.children("0201")).toEqual(STUBS["/children?parent=0201"].body);
        expect(await api.search("pam", 10)).toEqual(STUBS["/search?q=pam&limit=10"].body);
        expect(await api.resolve("020101")).toEqual(STUBS["/resolve/020101"].body);
    });

    it("turns an error body into a typed ApiError", async () => {
        const api = new GazetteerApi("", fixtureFetch());
        const failure = await api.resolve("0101").then(
            () => null,
            (exc: unknown) => exc,
        );
        expect(failure).toBeInstanceOf(ApiError);
        const apiError = failure as ApiError;
        expect(apiError.httpStatus).toBe(404);
        expect(apiError.code).toBe("NotLeaf");
        expect(apiError.message).toBe("code 0101 is not at the leaf level");
    });

    it("falls back to the transport status when the body is not the documented shape", async () => {
        const impl: FetchLike = () =>
            Promise.resolve({ ok: false, status: 502, json: () => Promise.resolve({}) });
        const api = new GazetteerApi("", impl);
        const failure = await api.levels().then(
            () => null,
            (exc: unknown) => exc,
        );
        expect(failure).toBeInstanceOf(ApiError);
        const apiError = failure as ApiError;
        expect(apiError.httpStatus).toBe(502);
        expect(apiError.code).toBe("Internal");
    });
});
