// View state holds only server-confirmed data: every transition below
// rebuilds it from a response body, never from a local guess of what the
// server will do.

import type {
  CreateProjectResponse,
  DiagnosticDto,
  EditResponse,
  ModelDto,
  PipelineResultDto,
  SentenceDto,
  SnapshotResponse,
  UseCaseDto,
} from "./types.js";

export interface Banner {
  code: string;
  message: string;
}

export interface ViewState {
  projectId: string | null;
  storyDraft: string;
  model: ModelDto | null;
  revision: number;
  plantuml: string;
  correctedText: string;
  sentences: readonly SentenceDto[];
  diagnostics: readonly DiagnosticDto[];
  dropped: ReadonlyArray<readonly [string, UseCaseDto]>;
  banner: Banner | null;
  conflict: boolean;
  busy: boolean;
}

export function initialState(): ViewState {
  return {
    projectId: null,
    storyDraft: "",
    model: null,
    revision: 0,
    plantuml: "",
    correctedText: "",
    sentences: [],
    diagnostics: [],
    dropped: [],
    banner: null,
    conflict: false,
    busy: false,
  };
}

function fromResult(state: ViewState, result: PipelineResultDto,
                    revision: number): ViewState {
  return {
    ...state,
    model: result.filtered_model,
    revision,
    plantuml: result.plantuml,
    correctedText: result.corrected_text,
    sentences: result.sentences,
    diagnostics: result.diagnostics,
    dropped: result.dropped,
    banner: null,
    conflict: false,
    busy: false,
  };
}

export function applyCreated(state: ViewState,
                             response: CreateProjectResponse): ViewState {
  return {
    ...fromResult(state, response.result, response.revision),
    projectId: response.project_id,
  };
}

export function applySnapshot(state: ViewState,
                              response: SnapshotResponse): ViewState {
  return fromResult(state, response.result, response.revision);
}

export function applyEditResponse(state: ViewState,
                                  response: EditResponse): ViewState {
  return {
    ...state,
    model: response.model,
    plantuml: response.plantuml,
    revision: response.revision,
    banner: null,
    conflict: false,
    busy: false,
  };
}

export function withBanner(state: ViewState, banner: Banner): ViewState {
  return { ...state, banner, busy: false };
}

export function withConflict(state: ViewState): ViewState {
  return { ...state, conflict: true, busy: false };
}

export function dismissBanner(state: ViewState): ViewState {
  return { ...state, banner: null };
}

export function withDraft(state: ViewState, storyDraft: string): ViewState {
  return { ...state, storyDraft };
}

export function withBusy(state: ViewState): ViewState {
  return { ...state, busy: true };
}

export function actorCount(state: ViewState): number {
  return state.model ? state.model.actors.length : 0;
}

export function useCaseCount(state: ViewState): number {
  if (!state.model) return 0;
  const model = state.model;
  return model.actors.reduce(
    (total, actor) => total + (model.associations[actor.key]?.length ?? 0), 0);
}
