// Bottom-up entry: one text box. Keystrokes are debounced into
// /search calls, picking a suggestion resolves its full chain and
// fills the per-level fields in a single step. Responses carry a
// sequence number so a slow reply for an old query can never
// overwrite the list shown for the current one.

import { ApiError, GazetteerApi } from "./api.js";
import type { LevelInfo, PathEntry, SearchCandidate } from "./api.js";
import { InteractionRecorder } from "./telemetry.js";
import type { CompletionHandler } from "./cascadeForm.js";

export type ReverseFormOptions = {
    debounceMs?: number;
    minChars?: number;
    limit?: number;
};

export class ReverseForm {
    private root: HTMLElement;
    private api: GazetteerApi;
    private recorder: InteractionRecorder;
    private onComplete: CompletionHandler | null;
    private debounceMs: number;
    private minChars: number;
    private limit: number;
    private input: HTMLInputElement | null = null;
    private list: HTMLUListElement | null = null;
    private emptyNote: HTMLElement | null = null;
    private errorBox: HTMLElement | null = null;
    private fields: HTMLInputElement[] = [];
    private suggestions: SearchCandidate[] = [];
    private activeIndex = -1;
    private timer: ReturnType<typeof setTimeout> | null = null;
    private seq = 0;

    constructor(
        root: HTMLElement,
        api: GazetteerApi,
        recorder: InteractionRecorder,
        options: ReverseFormOptions = {},
        onComplete: CompletionHandler | null = null,
    ) {
        this.root = root;
        this.api = api;
        this.recorder = recorder;
        this.onComplete = onComplete;
        this.debounceMs = options.debounceMs ?? 150;
        this.minChars = options.minChars ?? 1;
        this.limit = options.limit ?? 10;
    }

    async mount(): Promise<void> {
        this.root.textContent = "";
        this.root.classList.add("reverse-form");

        const levels = await this.api.levels();

        const box = document.createElement("div");
        box.className = "typeahead";
        this.input = document.createElement("input");
        this.input.type = "text";
        this.input.placeholder = "type a place name";
        this.input.autocomplete = "off";
        this.input.addEventListener("input", () => {
            this.onInput();
        });
        this.input.addEventListener("keydown", (event) => {
            this.onKeydown(event);
        });
        box.appendChild(this.input);

        this.list = document.createElement("ul");
        this.list.className = "suggestions";
        this.list.hidden = true;
        box.appendChild(this.list);

        this.emptyNote = document.createElement("div");
        this.emptyNote.className = "suggest-empty";
        this.emptyNote.textContent = "no matches";
        this.emptyNote.hidden = true;
        box.appendChild(this.emptyNote);

        this.root.appendChild(box);

        for (const level of levels) {
            const row = document.createElement("div");
            row.className = "level-row";
            const label = document.createElement("label");
            label.textContent = level.name;
            row.appendChild(label);
            const field = document.createElement("input");
            field.type = "text";
            field.readOnly = true;
            row.appendChild(field);
            this.fields.push(field);
            this.root.appendChild(row);
        }

        this.errorBox = document.createElement("div");
        this.errorBox.className = "form-error";
        this.errorBox.hidden = true;
        this.root.appendChild(this.errorBox);
    }

    reset(): void {
        this.seq += 1;
        if (this.timer !== null) {
            clearTimeout(this.timer);
            this.timer = null;
        }
        if (this.input !== null) {
            this.input.value = "";
        }
        for (const field of this.fields) {
            field.value = "";
        }
        this.renderSuggestions([], false);
        this.clearError();
    }

    private onInput(): void {
        this.recorder.action("keystroke");
        // Any edit obsoletes whatever reply is still in flight.
        this.seq += 1;
        if (this.timer !== null) {
            clearTimeout(this.timer);
            this.timer = null;
        }
        this.clearError();
        const text = this.input === null ? "" : this.input.value.trim();
        if (text.length < this.minChars) {
            this.renderSuggestions([], false);
            return;
        }
        this.timer = setTimeout(() => {
            this.timer = null;
            void this.runSearch(text);
        }, this.debounceMs);
    }

    private async runSearch(text: string): Promise<void> {
        this.seq += 1;
        const mySeq = this.seq;
        this.recorder.networkCall();
        let results: SearchCandidate[];
        try {
            results = await this.api.search(text, this.limit);
        } catch (exc) {
            if (mySeq !== this.seq) {
                return;
            }
            if (exc instanceof ApiError && exc.code === "QueryTooShort") {
                this.renderSuggestions([], false);
            } else {
                this.showError(exc);
            }
            return;
        }
        if (mySeq !== this.seq) {
            return;
        }
        this.renderSuggestions(results, true);
    }

    private renderSuggestions(results: SearchCandidate[], searched: boolean): void {
        this.suggestions = results;
        this.activeIndex = -1;
        if (this.list === null || this.emptyNote === null) {
            return;
        }
        this.list.textContent = "";
        for (let i = 0; i < results.length; i += 1) {
            const candidate = results[i];
            const item = document.createElement("li");
            item.className = "suggestion";

            const name = document.createElement("span");
            name.className = "suggestion-name";
            name.textContent = candidate.name;
            item.appendChild(name);

            const path = document.createElement("span");
            path.className = "suggestion-path";
            path.textContent = candidate.path.map((entry) => entry.name).join(" / ");
            item.appendChild(path);

            item.addEventListener("mousedown", () => {
                void this.pick(i);
            });
            this.list.appendChild(item);
        }
        this.list.hidden = results.length === 0;
        this.emptyNote.hidden = !(searched && results.length === 0);
    }

    private onKeydown(event: KeyboardEvent): void {
        if (this.suggestions.length === 0) {
            return;
        }
        if (event.key === "ArrowDown") {
            event.preventDefault();
            this.setActive(Math.min(this.activeIndex + 1, this.suggestions.length - 1));
        } else if (event.key === "ArrowUp") {
            event.preventDefault();
            this.setActive(Math.max(this.activeIndex - 1, 0));
        } else if (event.key === "Enter") {
            event.preventDefault();
            void this.pick(this.activeIndex >= 0 ? this.activeIndex : 0);
        } else if (event.key === "Escape") {
            this.renderSuggestions([], false);
        }
    }

    private setActive(index: number): void {
        this.activeIndex = index;
        if (this.list === null) {
            return;
        }
        const items = this.list.children;
        for (let i = 0; i < items.length; i += 1) {
            items[i].classList.toggle("active", i === index);
        }
    }

    private async pick(index: number): Promise<void> {
        const candidate = this.suggestions[index];
        if (candidate === undefined) {
            return;
        }
        this.recorder.action("pick_suggestion");
        if (this.input !== null) {
            this.input.value = candidate.name;
        }
        this.renderSuggestions([], false);
        this.recorder.networkCall();
        try {
            const location = await this.api.resolve(candidate.code);
            for (let i = 0; i < this.fields.length; i += 1) {
                const entry = location.levels[i];
                this.fields[i].value =
                    entry === undefined ? "" : `${entry.name} (${entry.code})`;
            }
            this.clearError();
            this.recorder.complete(location.levels);
            if (this.onComplete !== null) {
                this.onComplete(location.levels);
            }
        } catch (exc) {
            this.showError(exc);
        }
    }

    private showError(exc: unknown): void {
        if (this.errorBox === null) {
            return;
        }
        this.errorBox.textContent = exc instanceof Error ? exc.message : String(exc);
        this.errorBox.hidden = false;
    }

    private clearError(): void {
        if (this.errorBox !== null) {
            this.errorBox.hidden = true;
        }
    }
}
