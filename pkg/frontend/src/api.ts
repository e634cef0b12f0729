// Typed client for the georeverse HTTP API. The form never computes
// hierarchy relationships itself; every code/name/path shown on screen
// comes out of one of these four endpoints.

export type LevelInfo = {
    ordinal: number;
    name: string;
};

export type Option = {
    code: string;
    name: string;
};

export type PathEntry = {
    level: number;
    code: string;
    name: string;
};

export type MatchClass = "exact" | "prefix" | "substring";

export type SearchCandidate = {
    code: string;
    name: string;
    match_class: MatchClass;
    path: PathEntry[];
};

export type ResolvedLocation = {
    levels: PathEntry[];
};

// Error body the service sends for every non-2xx response.
type ErrorBody = {
    http_status: number;
    code: string;
    message: string;
};

export class ApiError extends Error {
    httpStatus: number;
    code: string;

    constructor(httpStatus: number, code: string, message: string) {
        super(message);
        this.name = "ApiError";
        this.httpStatus = httpStatus;
        this.code = code;
    }
}

// Minimal slice of the Fetch API the client relies on, so tests can
// substitute a plain function without faking a whole Response object.
export type ResponseLike = {
    ok: boolean;
    status: number;
    json(): Promise<unknown>;
};

export type FetchLike = (url: string) => Promise<ResponseLike>;

const defaultFetch: FetchLike = (url) => fetch(url);

export class GazetteerApi {
    private baseUrl: string;
    private fetchImpl: FetchLike;

    constructor(baseUrl = "", fetchImpl: FetchLike = defaultFetch) {
        this.baseUrl = baseUrl.replace(/\/+$/, "");
        this.fetchImpl = fetchImpl;
    }

    private async get<T>(path: string): Promise<T> {
        const response = await this.fetchImpl(this.baseUrl + path);
        const body = (await response.json()) as unknown;
        if (!response.ok) {
            const err = body as Partial<ErrorBody>;
            throw new ApiError(
                err.http_status ?? response.status,
                err.code ?? "Internal",
                err.message ?? "request failed",
            );
        }
        return body as T;
    }

    levels(): Promise<LevelInfo[]> {
        return this.get<LevelInfo[]>("/levels");
    }

    children(parent?: string): Promise<Option[]> {
        if (parent === undefined) {
            return this.get<Option[]>("/children");
        }
        return this.get<Option[]>(`/children?parent=${encodeURIComponent(parent)}`);
    }

    search(q: string, limit?: number): Promise<SearchCandidate[]> {
        let path = `/search?q=${encodeURIComponent(q)}`;
        if (limit !== undefined) {
            path += `&limit=${limit}`;
        }
        return this.get<SearchCandidate[]>(path);
    }

    resolve(code: string): Promise<ResolvedLocation> {
        return this.get<ResolvedLocation>(`/resolve/${encodeURIComponent(code)}`);
    }
}
