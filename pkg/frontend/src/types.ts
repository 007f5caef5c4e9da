// Wire types for the project service API.

export interface ActorDto {
  name: string;
  key: string;
  first_seen: readonly [number, number];
}

export interface UseCaseDto {
  verb_lemma: string;
  object_lemma: string;
  phrase: string;
  source: readonly [number, number];
}

export interface ModelDto {
  system_name: string;
  actors: readonly ActorDto[];
  associations: Readonly<Record<string, readonly UseCaseDto[]>>;
}

export interface TokenDto {
  index: number;
  text: string;
  lemma: string;
  pos: string;
  dep: string;
  sentence_index: number;
}

export interface SentenceDto {
  text: string;
  tokens: readonly TokenDto[];
}

export interface DiagnosticDto {
  severity: string;
  message: string;
  location: readonly [number, number] | null;
}

export interface CorrectionReportDto {
  replacements: ReadonlyArray<readonly [string, string, number]>;
  untouched_unknown: readonly string[];
}

export interface PipelineResultDto {
  story: string;
  corrected_text: string;
  report: CorrectionReportDto;
  sentences: readonly SentenceDto[];
  raw_model: ModelDto;
  filtered_model: ModelDto;
  dropped: ReadonlyArray<readonly [string, UseCaseDto]>;
  plantuml: string;
  diagnostics: readonly DiagnosticDto[];
}

export interface CreateProjectResponse {
  project_id: string;
  result: PipelineResultDto;
  revision: number;
}

export interface SnapshotResponse {
  result: PipelineResultDto;
  revision: number;
}

export interface EditResponse {
  model: ModelDto;
  plantuml: string;
  revision: number;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  location?: readonly [number, number];
}

export type EditCommand =
  | { kind: "add_actor"; name: string }
  | { kind: "remove_actor"; key: string }
  | { kind: "rename_actor"; key: string; new_name: string }
  | { kind: "add_use_case"; actor_key: string; phrase: string }
  | { kind: "remove_use_case"; actor_key: string; phrase: string }
  | { kind: "rename_use_case"; actor_key: string; old_phrase: string; new_phrase: string }
  | { kind: "reassign_use_case"; phrase: string; from_key: string; to_key: string };
