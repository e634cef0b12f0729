// Page wiring: a mode toggle between the two entry forms, a shared
// interaction recorder, and an export button for the completed logs.
// The API base defaults to same-origin and can be overridden with
// ?api=http://host:port when the page is served separately.

import { GazetteerApi } from "./api.js";
import type { PathEntry } from "./api.js";
import { CascadeForm } from "./cascadeForm.js";
import { ReverseForm } from "./reverseForm.js";
import { InteractionRecorder } from "./telemetry.js";
import type { EntryMode } from "./telemetry.js";

type EntryForm = CascadeForm | ReverseForm;

function download(filename: string, text: string): void {
    const blob = new Blob([text], { type: "application/json" });
    const url = URL.createObjectURL(blob);
    const anchor = document.createElement("a");
    anchor.href = url;
    anchor.download = filename;
    anchor.click();
    URL.revokeObjectURL(url);
}

export function setupApp(root: Document): void {
    const params = new URLSearchParams(root.defaultView?.location.search ?? "");
    const api = new GazetteerApi(params.get("api") ?? "");
    const recorder = new InteractionRecorder();

    const mount = root.getElementById("form-mount") as HTMLElement;
    const exportButton = root.getElementById("export-logs") as HTMLButtonElement;
    const newEntryButton = root.getElementById("new-entry") as HTMLButtonElement;
    const modeInputs = Array.from(
        root.querySelectorAll<HTMLInputElement>("input[name=mode]"),
    );

    let form: EntryForm | null = null;
    let mode: EntryMode = "cascade";

    const refreshExport = (): void => {
        exportButton.disabled = recorder.completedCount() === 0;
    };

    const onComplete = (_location: PathEntry[]): void => {
        refreshExport();
        // Arm a fresh attempt so the next interaction logs cleanly.
        recorder.begin(mode);
    };

    const showMode = async (next: EntryMode): Promise<void> => {
        mode = next;
        // Switching modes abandons whatever was half-entered.
        recorder.begin(mode);
        mount.textContent = "";
        if (mode === "cascade") {
            form = new CascadeForm(mount, api, recorder, onComplete);
        } else {
            form = new ReverseForm(mount, api, recorder, {}, onComplete);
        }
        await form.mount();
    };

    for (const input of modeInputs) {
        input.addEventListener("change", () => {
            if (input.checked) {
                void showMode(input.value as EntryMode);
            }
        });
    }

    newEntryButton.addEventListener("click", () => {
        if (form !== null) {
            form.reset();
        }
        recorder.begin(mode);
    });

    exportButton.addEventListener("click", () => {
        if (recorder.completedCount() > 0) {
            download("interaction-log.json", recorder.exportJson());
        }
    });

    refreshExport();
    void showMode("cascade");
}

if (typeof document !== "undefined" && document.getElementById("form-mount") !== null) {
    setupApp(document);
}
