// Interaction instrumentation. Each entry attempt becomes one log:
// which mode was used, every user action with a timestamp, how many
// network calls the attempt needed, and the resolved location it
// ended on. Completed logs can be exported as JSON for analysis.

import type { PathEntry } from "./api.js";

export type EntryMode = "cascade" | "reverse";

export type ActionKind =
    | "open_dropdown"
    | "pick_option"
    | "keystroke"
    | "pick_suggestion";

export type InteractionAction = {
    kind: ActionKind;
    timestamp: number;
};

export type InteractionLog = {
    mode: EntryMode;
    actions: InteractionAction[];
    network_calls: number;
    completed_at?: number;
    final?: PathEntry[];
};

// Exported records additionally carry the first-action-to-completion
// span so downstream analysis never has to recompute it.
export type ExportedLog = InteractionLog & {
    completed_at: number;
    final: PathEntry[];
    elapsed_ms: number;
};

export class InteractionRecorder {
    private current: InteractionLog | null = null;
    private finished: ExportedLog[] = [];
    private now: () => number;

    constructor(now: () => number = () => Date.now()) {
        this.now = now;
    }

    // Starts a fresh attempt, discarding any in-progress one. Switching
    // modes goes through here, so a half-done attempt never leaks into
    // the export.
    begin(mode: EntryMode): void {
        this.current = { mode, actions: [], network_calls: 0 };
    }

    abandon(): void {
        this.current = null;
    }

    action(kind: ActionKind): void {
        if (this.current === null) {
            return;
        }
        this.current.actions.push({ kind, timestamp: this.now() });
    }

    networkCall(): void {
        if (this.current !== null) {
            this.current.network_calls += 1;
        }
    }

    complete(final: PathEntry[]): void {
        if (this.current === null) {
            return;
        }
        const completedAt = this.now();
        const first = this.current.actions[0];
        const startedAt = first === undefined ? completedAt : first.timestamp;
        this.finished.push({
            ...this.current,
            completed_at: completedAt,
            final,
            elapsed_ms: completedAt - startedAt,
        });
        this.current = null;
    }

    inProgress(): InteractionLog | null {
        return this.current;
    }

    completedCount(): number {
        return this.finished.length;
    }

    completedLogs(): ExportedLog[] {
        return this.finished.slice();
    }

    exportJson(): string {
        return JSON.stringify(this.finished, null, 2);
    }
}
