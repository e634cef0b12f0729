import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { GazetteerApi } from "../src/api.js";
import type { FetchLike } from "../src/api.js";
import { ReverseForm } from "../src/reverseForm.js";
import type { ReverseFormOptions } from "../src/reverseForm.js";
import { InteractionRecorder } from "../src/telemetry.js";
import {
    STUBS,
    deferredFetch,
    fixtureFetch,
    flushAsync,
    makeResponse,
    pressKey,
    typeText,
} from "./helpers.js";

type Mounted = {
    root: HTMLElement;
    form: ReverseForm;
    recorder: InteractionRecorder;
    requested: string[];
    input: HTMLInputElement;
};

async function mountForm(
    fetchImpl?: FetchLike,
    options: ReverseFormOptions = {},
): Promise<Mounted> {
    const requested: string[] = [];
    const api = new GazetteerApi("", fetchImpl ?? fixtureFetch(requested));
    const recorder = new InteractionRecorder();
    const root = document.createElement("div");
    recorder.begin("reverse");
    const form = new ReverseForm(root, api, recorder, options, null);
    await form.mount();
    const input = root.querySelector("input[type=text]") as HTMLInputElement;
    return { root, form, recorder, requested, input };
}

function suggestionNames(root: HTMLElement): string[] {
    return Array.from(root.querySelectorAll(".suggestion-name")).map(
        (node) => node.textContent ?? "",
    );
}

function suggestionPaths(root: HTMLElement): string[] {
    return Array.from(root.querySelectorAll(".suggestion-path")).map(
        (node) => node.textContent ?? "",
    );
}

function fieldValues(root: HTMLElement): string[] {
    return Array.from(root.querySelectorAll<HTMLInputElement>(".level-row input")).map(
        (field) => field.value,
    );
}

describe("ReverseForm", () => {
    beforeEach(() => {
        vi.useFakeTimers();
    });

    afterEach(() => {
        vi.useRealTimers();
    });

    it("mounts a search box and one read-only field per level", async () => {
        const { root, input } = await mountForm();
        expect(input.placeholder).toBe("type a place name");
        const labels = Array.from(root.querySelectorAll(".level-row label")).map(
            (label) => label.textContent,
        );
        expect(labels).toEqual(["region", "province", "district"]);
        const fields = root.querySelectorAll<HTMLInputElement>(".level-row input");
        expect(fields).toHaveLength(3);
        for (const field of Array.from(fields)) {
            expect(field.readOnly).toBe(true);
        }
    });

    it("debounces keystrokes into a single search request", async () => {
        const { requested, input } = await mountForm();
        typeText(input, "p");
        typeText(input, "pa");
        typeText(input, "pam");

        await vi.advanceTimersByTimeAsync(149);
        expect(requested.filter((url) => url.startsWith("/search"))).toEqual([]);

        await vi.advanceTimersByTimeAsync(1);
        await flushAsync();
        expect(requested.filter((url) => url.startsWith("/search"))).toEqual([
            "/search?q=pam&limit=10",
        ]);
    });

    it("does not search below the minimum query length", async () => {
        const { requested, input } = await mountForm();
        typeText(input, "   ");
        await vi.advanceTimersByTimeAsync(300);
        expect(requested.filter((url) => url.startsWith("/search"))).toEqual([]);
    });

    it("shows each suggestion with its full path so homonyms stay distinguishable", async () => {
        const { root, input } = await mountForm();
        typeText(input, "san juan");
        await vi.advanceTimersByTimeAsync(150);
        await flushAsync();

        expect(suggestionNames(root)).toEqual(["San Juan", "San Juan"]);
        expect(suggestionPaths(root)).toEqual([
            "Alpha / Alpha Norte / San Juan",
            "Alpha / Alpha Sur / San Juan",
        ]);
    });

    it("clearing the box empties the suggestion list", async () => {
        const { root, input } = await mountForm();
        typeText(input, "pam");
        await vi.advanceTimersByTimeAsync(150);
        await flushAsync();
        expect(suggestionNames(root)).toHaveLength(2);

        typeText(input, "");
        await flushAsync();
        expect(suggestionNames(root)).toEqual([]);
        const list = root.querySelector(".suggestions") as HTMLElement;
        expect(list.hidden).toBe(true);
    });

    it("a query with no matches shows a quiet placeholder, not an error", async () => {
        const { root, input } = await mountForm();
        typeText(input, "zzz");
        await vi.advanceTimersByTimeAsync(150);
        await flushAsync();

        const list = root.querySelector(".suggestions") as HTMLElement;
        const empty = root.querySelector(".suggest-empty") as HTMLElement;
        const error = root.querySelector(".form-error") as HTMLElement;
        expect(list.hidden).toBe(true);
        expect(empty.hidden).toBe(false);
        expect(error.hidden).toBe(true);
    });

    it("fills every level field from one picked suggestion", async () => {
        const { root, recorder, input } = await mountForm();
        typeText(input, "pampas ver");
        await vi.advanceTimersByTimeAsync(150);
        await flushAsync();
        expect(suggestionNames(root)).toEqual(["Pampas Verdes"]);

        pressKey(input, "Enter");
        await flushAsync();

        expect(fieldValues(root)).toEqual([
            "Beta (02)",
            "Beta Centro (0201)",
            "Pampas Verdes (020101)",
        ]);
        expect(input.value).toBe("Pampas Verdes");

        expect(recorder.completedCount()).toBe(1);
        const log = recorder.completedLogs()[0];
        expect(log.mode).toBe("reverse");
        const picks = log.actions.filter((action) => action.kind === "pick_suggestion");
        expect(picks).toHaveLength(1);
        expect(log.network_calls).toBe(2);
        expect(log.final?.map((entry) => entry.code)).toEqual(["02", "0201", "020101"]);
    });

    it("arrow keys move the highlight and enter picks the highlighted entry", async () => {
        const { root, input } = await mountForm();
        typeText(input, "san juan");
        await vi.advanceTimersByTimeAsync(150);
        await flushAsync();

        pressKey(input, "ArrowDown");
        pressKey(input, "ArrowDown");
        const items = Array.from(root.querySelectorAll(".suggestion"));
        expect(items[0].classList.contains("active")).toBe(false);
        expect(items[1].classList.contains("active")).toBe(true);

        pressKey(input, "Enter");
        await flushAsync();
        expect(fieldValues(root)).toEqual([
            "Alpha (01)",
            "Alpha Sur (0102)",
            "San Juan (010201)",
        ]);
    });

    it("clicking a suggestion picks it", async () => {
        const { root, input } = await mountForm();
        typeText(input, "san juan");
        await vi.advanceTimersByTimeAsync(150);
        await flushAsync();

        const items = Array.from(root.querySelectorAll(".suggestion"));
        items[0].dispatchEvent(new Event("mousedown"));
        await flushAsync();
        expect(fieldValues(root)).toEqual([
            "Alpha (01)",
            "Alpha Norte (0101)",
            "San Juan (010102)",
        ]);
    });

    it("escape closes the suggestion list", async () => {
        const { root, input } = await mountForm();
        typeText(input, "pam");
        await vi.advanceTimersByTimeAsync(150);
        await flushAsync();
        expect(suggestionNames(root)).toHaveLength(2);

        pressKey(input, "Escape");
        expect(suggestionNames(root)).toEqual([]);
    });

    it("discards a slow response that arrives after a newer query answered", async () => {
        const { impl, calls } = deferredFetch();
        const recorder = new InteractionRecorder();
        const root = document.createElement("div");
        recorder.begin("reverse");
        const form = new ReverseForm(root, new GazetteerApi("", impl), recorder, {}, null);
        const mounting = form.mount();
        await flushAsync();
        calls[0].respond(STUBS["/levels"]);
        await mounting;

        const input = root.querySelector("input[type=text]") as HTMLInputElement;

        typeText(input, "pam");
        await vi.advanceTimersByTimeAsync(150);
        typeText(input, "pampas ver");
        await vi.advanceTimersByTimeAsync(150);

        expect(calls.map((call) => call.url)).toEqual([
            "/levels",
            "/search?q=pam&limit=10",
            "/search?q=pampas%20ver&limit=10",
        ]);

        calls[2].respond(STUBS["/search?q=pampas%20ver&limit=10"]);
        await flushAsync();
        expect(suggestionNames(root)).toEqual(["Pampas Verdes"]);

        calls[1].respond(STUBS["/search?q=pam&limit=10"]);
        await flushAsync();
        expect(suggestionNames(root)).toEqual(["Pampas Verdes"]);
    });

    it("drops an in-flight response when the box was cleared meanwhile", async () => {
        const { impl, calls } = deferredFetch();
        const recorder = new InteractionRecorder();
        const root = document.createElement("div");
        recorder.begin("reverse");
        const form = new ReverseForm(root, new GazetteerApi("", impl), recorder, {}, null);
        const mounting = form.mount();
        await flushAsync();
        calls[0].respond(STUBS["/levels"]);
        await mounting;

        const input = root.querySelector("input[type=text]") as HTMLInputElement;
        typeText(input, "pam");
        await vi.advanceTimersByTimeAsync(150);
        typeText(input, "");
        calls[1].respond(STUBS["/search?q=pam&limit=10"]);
        await flushAsync();

        expect(suggestionNames(root)).toEqual([]);
    });

    it("shows a resolve failure inline and stays usable", async () => {
        const inner = fixtureFetch();
        const failing: FetchLike = (url) => {
            if (url === "/resolve/020101") {
                return Promise.resolve(
                    makeResponse({
                        status: 500,
                        body: {
                            http_status: 500,
                            code: "Internal",
                            message: "temporarily unavailable",
                        },
                    }),
                );
            }
            return inner(url);
        };
        const { root, input, recorder } = await mountForm(failing);

        typeText(input, "pampas ver");
        await vi.advanceTimersByTimeAsync(150);
        await flushAsync();
        pressKey(input, "Enter");
        await flushAsync();

        const error = root.querySelector(".form-error") as HTMLElement;
        expect(error.hidden).toBe(false);
        expect(error.textContent).toContain("temporarily unavailable");
        expect(recorder.completedCount()).toBe(0);

        typeText(input, "san juan");
        await vi.advanceTimersByTimeAsync(150);
        await flushAsync();
        expect(error.hidden).toBe(true);
        expect(suggestionNames(root)).toEqual(["San Juan", "San Juan"]);
    });

    it("reset clears the box, the fields and any pending search", async () => {
        const { root, form, input, requested } = await mountForm();
        typeText(input, "pampas ver");
        await vi.advanceTimersByTimeAsync(150);
        await flushAsync();
        pressKey(input, "Enter");
        await flushAsync();
        expect(fieldValues(root)[2]).toBe("Pampas Verdes (020101)");

        typeText(input, "sa");
        form.reset();
        await vi.advanceTimersByTimeAsync(300);

        expect(input.value).toBe("");
        expect(fieldValues(root)).toEqual(["", "", ""]);
        expect(requested.filter((url) => url.includes("q=sa"))).toEqual([]);
    });
});
