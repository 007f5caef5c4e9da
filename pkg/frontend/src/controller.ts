// Controller: owns the state, talks to the API, re-renders. All model
// mutations round-trip through the server before anything on screen
// changes; a 409 swaps in the conflict prompt instead of retrying.

import { ApiClient, ApiError, ConflictError } from "./api.js";
import type { Handlers } from "./render.js";
import { render } from "./render.js";
import {
  ViewState,
  applyCreated,
  applyEditResponse,
  applySnapshot,
  dismissBanner,
  initialState,
  withBanner,
  withBusy,
  withConflict,
  withDraft,
} from "./state.js";
import type { EditCommand } from "./types.js";

export class Controller {
  state: ViewState = initialState();

  constructor(
    private readonly client: ApiClient,
    private readonly root: HTMLElement,
    private readonly clipboard: (text: string) => void = () => {},
  ) {}

  start(): void {
    this.paint();
  }

  private paint(): void {
    render(this.root, this.state, this.handlers());
  }

  private set(state: ViewState): void {
    this.state = state;
    this.paint();
  }

  private handlers(): Handlers {
    return {
      submitStory: (draft) => void this.submitStory(draft),
      applyEdit: (command) => void this.applyEdit(command),
      undo: () => void this.undo(),
      refreshAfterConflict: () => void this.refresh(),
      dismissBanner: () => this.set(dismissBanner(this.state)),
      copyPlantuml: (text) => this.clipboard(text),
    };
  }

  async submitStory(draft: string): Promise<void> {
    const story = draft.trim();
    if (!story) {
      this.set(withBanner(this.state, {
        code: "empty_input",
        message: "Type a story first.",
      }));
      return;
    }
    this.set(withBusy(withDraft(this.state, draft)));
    try {
      const created = await this.client.createProject(story);
      this.set(applyCreated(this.state, created));
    } catch (error) {
      this.fail(error);
    }
  }

  async applyEdit(command: EditCommand): Promise<void> {
    if (!this.state.projectId) return;
    try {
      const response = await this.client.applyEdit(
        this.state.projectId, this.state.revision, command);
      this.set(applyEditResponse(this.state, response));
    } catch (error) {
      this.fail(error);
    }
  }

  async undo(): Promise<void> {
    if (!this.state.projectId) return;
    try {
      const response = await this.client.undo(this.state.projectId, this.state.revision);
      this.set(applyEditResponse(this.state, response));
    } catch (error) {
      this.fail(error);
    }
  }

  async refresh(): Promise<void> {
    if (!this.state.projectId) return;
    try {
      const snapshot = await this.client.getProject(this.state.projectId);
      this.set(applySnapshot(this.state, snapshot));
    } catch (error) {
      this.fail(error);
    }
  }

  private fail(error: unknown): void {
    if (error instanceof ConflictError) {
      this.set(withConflict(this.state));
    } else if (error instanceof ApiError) {
      this.set(withBanner(this.state, { code: error.code, message: error.message }));
    } else {
      this.set(withBanner(this.state, {
        code: "network_error",
        message: error instanceof Error ? error.message : String(error),
      }));
    }
  }
}
