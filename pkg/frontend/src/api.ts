// Thin client over the project service; every mutation carries the
// revision it was computed against, and a 409 surfaces as ConflictError
// so callers can refetch and let the user retry.

import type {
  ApiErrorBody,
  CreateProjectResponse,
  EditCommand,
  EditResponse,
  SnapshotResponse,
} from "./types.js";

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;
  readonly location?: readonly [number, number];

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.name = "ApiError";
    this.status = status;
    this.code = body.code;
    this.location = body.location;
  }
}

export class ConflictError extends ApiError {
  constructor(body: ApiErrorBody) {
    super(409, body);
    this.name = "ConflictError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function errorFrom(response: Response): Promise<ApiError> {
  let body: ApiErrorBody;
  try {
    body = (await response.json()) as ApiErrorBody;
  } catch {
    body = { code: "http_error", message: `HTTP ${response.status}` };
  }
  if (response.status === 409) {
    return new ConflictError(body);
  }
  return new ApiError(response.status, body);
}

export class ApiClient {
  private readonly fetchImpl: FetchLike;
  private readonly base: string;

  constructor(fetchImpl?: FetchLike, base = "") {
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
    this.base = base;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.base + path, init);
    if (!response.ok) {
      throw await errorFrom(response);
    }
    return (await response.json()) as T;
  }

  private jsonInit(method: string, payload: unknown): RequestInit {
    return {
      method,
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    };
  }

  createProject(
    story: string,
    options: { systemName?: string; filter?: boolean } = {},
  ): Promise<CreateProjectResponse> {
    const payload: Record<string, unknown> = { story };
    if (options.systemName !== undefined) payload.system_name = options.systemName;
    if (options.filter !== undefined) payload.filter = options.filter;
    return this.request("/api/projects", this.jsonInit("POST", payload));
  }

  getProject(projectId: string): Promise<SnapshotResponse> {
    return this.request(`/api/projects/${projectId}`);
  }

  applyEdit(
    projectId: string,
    expectedRevision: number,
    command: EditCommand,
  ): Promise<EditResponse> {
    return this.request(
      `/api/projects/${projectId}/edits`,
      this.jsonInit("POST", { expected_revision: expectedRevision, command }),
    );
  }

  undo(projectId: string, expectedRevision?: number): Promise<EditResponse> {
    const payload = expectedRevision === undefined
      ? {}
      : { expected_revision: expectedRevision };
    return this.request(`/api/projects/${projectId}/undo`, this.jsonInit("POST", payload));
  }

  async getPlantuml(projectId: string): Promise<string> {
    const response = await this.fetchImpl(`${this.base}/api/projects/${projectId}/plantuml`);
    if (!response.ok) {
      throw await errorFrom(response);
    }
    return response.text();
  }

  async deleteProject(projectId: string): Promise<void> {
    const response = await this.fetchImpl(`${this.base}/api/projects/${projectId}`, {
      method: "DELETE",
    });
    if (!response.ok) {
      throw await errorFrom(response);
    }
  }
}
