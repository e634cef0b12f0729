// Top-down entry: one dropdown per level, each populated from
// /children once its parent is picked. Picking the leaf level
// confirms the chain through /resolve and completes the attempt.

import { GazetteerApi } from "./api.js";
import type { LevelInfo, Option, PathEntry } from "./api.js";
import { InteractionRecorder } from "./telemetry.js";

export type CompletionHandler = (location: PathEntry[]) => void;

export class CascadeForm {
    private root: HTMLElement;
    private api: GazetteerApi;
    private recorder: InteractionRecorder;
    private onComplete: CompletionHandler | null;
    private levels: LevelInfo[] = [];
    private selects: HTMLSelectElement[] = [];
    private errorBox: HTMLElement | null = null;
    private retryButton: HTMLButtonElement | null = null;
    private resultLine: HTMLElement | null = null;
    private retryOp: (() => void) | null = null;

    constructor(
        root: HTMLElement,
        api: GazetteerApi,
        recorder: InteractionRecorder,
        onComplete: CompletionHandler | null = null,
    ) {
        this.root = root;
        this.api = api;
        this.recorder = recorder;
        this.onComplete = onComplete;
    }

    async mount(): Promise<void> {
        this.root.textContent = "";
        this.root.classList.add("cascade-form");

        this.levels = await this.api.levels();
        for (const level of this.levels) {
            const row = document.createElement("div");
            row.className = "level-row";

            const label = document.createElement("label");
            label.textContent = level.name;
            row.appendChild(label);

            const select = document.createElement("select");
            select.disabled = true;
            select.appendChild(this.placeholderOption());
            const index = this.selects.length;
            select.addEventListener("mousedown", () => {
                if (!select.disabled) {
                    this.recorder.action("open_dropdown");
                }
            });
            select.addEventListener("change", () => {
                void this.onPick(index);
            });
            row.appendChild(select);

            this.selects.push(select);
            this.root.appendChild(row);
        }

        this.errorBox = document.createElement("div");
        this.errorBox.className = "form-error";
        this.errorBox.hidden = true;
        const message = document.createElement("span");
        this.errorBox.appendChild(message);
        this.retryButton = document.createElement("button");
        this.retryButton.type = "button";
        this.retryButton.textContent = "retry";
        this.retryButton.addEventListener("click", () => {
            if (this.retryOp !== null) {
                this.retryOp();
            }
        });
        this.errorBox.appendChild(this.retryButton);
        this.root.appendChild(this.errorBox);

        this.resultLine = document.createElement("div");
        this.resultLine.className = "form-result";
        this.root.appendChild(this.resultLine);

        await this.loadOptions(0, undefined);
    }

    // Clears every pick but keeps the already-loaded root options, so a
    // follow-up entry starts from a usable first dropdown.
    reset(): void {
        for (let i = this.selects.length - 1; i >= 1; i -= 1) {
            this.clearSelect(i);
        }
        const first = this.selects[0];
        if (first !== undefined) {
            first.value = "";
        }
        if (this.resultLine !== null) {
            this.resultLine.textContent = "";
        }
        this.clearError();
    }

    private placeholderOption(): HTMLOptionElement {
        const option = document.createElement("option");
        option.value = "";
        option.textContent = "(choose)";
        return option;
    }

    private clearSelect(index: number): void {
        const select = this.selects[index];
        if (select === undefined) {
            return;
        }
        select.textContent = "";
        select.appendChild(this.placeholderOption());
        select.value = "";
        select.disabled = true;
    }

    private setOptions(index: number, options: Option[]): void {
        const select = this.selects[index];
        if (select === undefined) {
            return;
        }
        select.textContent = "";
        select.appendChild(this.placeholderOption());
        for (const entry of options) {
            const option = document.createElement("option");
            option.value = entry.code;
            option.textContent = entry.name;
            select.appendChild(option);
        }
        select.value = "";
        select.disabled = false;
    }

    private async onPick(index: number): Promise<void> {
        const select = this.selects[index];
        if (select === undefined) {
            return;
        }
        const code = select.value;
        for (let i = this.selects.length - 1; i > index; i -= 1) {
            this.clearSelect(i);
        }
        if (this.resultLine !== null) {
            this.resultLine.textContent = "";
        }
        if (code === "") {
            return;
        }
        this.recorder.action("pick_option");
        if (index === this.selects.length - 1) {
            await this.finish(code);
        } else {
            await this.loadOptions(index + 1, code);
        }
    }

    private async loadOptions(index: number, parent: string | undefined): Promise<void> {
        this.recorder.networkCall();
        try {
            const options = await this.api.children(parent);
            this.setOptions(index, options);
            this.clearError();
        } catch (exc) {
            this.showError(exc, () => {
                void this.loadOptions(index, parent);
            });
        }
    }

    private async finish(code: string): Promise<void> {
        this.recorder.networkCall();
        try {
            const location = await this.api.resolve(code);
            this.clearError();
            if (this.resultLine !== null) {
                const names = location.levels.map((entry) => entry.name);
                this.resultLine.textContent = `${names.join(" / ")} [${code}]`;
            }
            this.recorder.complete(location.levels);
            if (this.onComplete !== null) {
                this.onComplete(location.levels);
            }
        } catch (exc) {
            this.showError(exc, () => {
                void this.finish(code);
            });
        }
    }

    private showError(exc: unknown, retry: (() => void) | null): void {
        if (this.errorBox === null) {
            return;
        }
        const message = exc instanceof Error ? exc.message : String(exc);
        const span = this.errorBox.firstChild as HTMLElement;
        span.textContent = message;
        this.retryOp = retry;
        if (this.retryButton !== null) {
            this.retryButton.hidden = retry === null;
        }
        this.errorBox.hidden = false;
    }

    private clearError(): void {
        if (this.errorBox !== null) {
            this.errorBox.hidden = true;
        }
        this.retryOp = null;
    }
}
