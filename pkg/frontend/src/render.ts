// DOM rendering. One render(state) pass rebuilds the app container from
// the current server-confirmed state; event handlers call back into the
// controller, which talks to the API and re-renders.

import type { EditCommand } from "./types.js";
import type { ViewState } from "./state.js";
import { actorCount, useCaseCount } from "./state.js";

export interface Handlers {
  submitStory(draft: string): void;
  applyEdit(command: EditCommand): void;
  undo(): void;
  refreshAfterConflict(): void;
  dismissBanner(): void;
  copyPlantuml(text: string): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  children: ReadonlyArray<Node | string> = [],
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key === "class") node.className = value;
    else node.setAttribute(key, value);
  }
  for (const child of children) {
    node.append(child);
  }
  return node;
}

function button(label: string, className: string, onClick: () => void): HTMLButtonElement {
  const node = el("button", { class: className, type: "button" }, [label]);
  node.addEventListener("click", onClick);
  return node;
}

function promptText(message: string, fallback = ""): string | null {
  const value = window.prompt(message, fallback);
  if (value === null) return null;
  const trimmed = value.trim();
  return trimmed ? trimmed : null;
}

export function render(root: HTMLElement, state: ViewState, handlers: Handlers): void {
  root.replaceChildren();
  root.append(renderStoryForm(state, handlers));
  if (state.banner) {
    root.append(renderBanner(state, handlers));
  }
  if (state.conflict) {
    root.append(renderConflictPrompt(handlers));
  }
  if (state.model) {
    root.append(renderDiagnostics(state));
    root.append(renderInspector(state));
    root.append(renderModelEditor(state, handlers));
    root.append(renderPlantumlPane(state, handlers));
  }
}

function renderStoryForm(state: ViewState, handlers: Handlers): HTMLElement {
  const textarea = el("textarea", {
    id: "story-input",
    rows: "4",
    placeholder: "Paste a user story, e.g. “A customer buys a product.”",
  }) as HTMLTextAreaElement;
  textarea.value = state.storyDraft;
  const submit = button(state.busy ? "Working…" : "Analyze story",
    "primary", () => handlers.submitStory(textarea.value));
  submit.id = "submit-story";
  if (state.busy) submit.disabled = true;
  return el("section", { class: "card story-form" }, [
    el("h2", {}, ["User story"]),
    textarea,
    el("div", { class: "row" }, [submit]),
  ]);
}

function renderBanner(state: ViewState, handlers: Handlers): HTMLElement {
  const banner = state.banner!;
  return el("div", { class: "banner error", id: "error-banner" }, [
    el("strong", {}, [banner.code]),
    ` ${banner.message} `,
    button("Dismiss", "link", handlers.dismissBanner),
  ]);
}

function renderConflictPrompt(handlers: Handlers): HTMLElement {
  return el("div", { class: "banner conflict", id: "conflict-prompt" }, [
    el("strong", {}, ["Edit conflict."]),
    " Someone else changed this project; reload the latest model and retry. ",
    button("Reload latest", "link", handlers.refreshAfterConflict),
  ]);
}

function renderDiagnostics(state: ViewState): HTMLElement {
  const items = state.diagnostics.map((diag) => {
    const where = diag.location
      ? ` (sentence ${diag.location[0] + 1}, token ${diag.location[1] + 1})`
      : "";
    return el("li", { class: `diagnostic ${diag.severity}` },
      [`${diag.severity}: ${diag.message}${where}`]);
  });
  if (!items.length) {
    return el("div", {});
  }
  return el("section", { class: "card diagnostics" }, [
    el("h2", {}, ["Diagnostics"]),
    el("ul", {}, items),
  ]);
}

function renderInspector(state: ViewState): HTMLElement {
  const sentences = state.sentences.map((sentence, index) => {
    const tokens = sentence.tokens.map((token) =>
      el("span", { class: `token pos-${token.pos.toLowerCase()}`, title: `lemma: ${token.lemma}` }, [
        token.text,
        el("sub", {}, [token.dep === "NONE" ? token.pos : `${token.pos}·${token.dep}`]),
      ]));
    const flow: Array<Node | string> = [];
    tokens.forEach((node, i) => {
      if (i) flow.push(" ");
      flow.push(node);
    });
    return el("div", { class: "sentence" }, [
      el("h3", {}, [`Sentence ${index + 1}`]),
      el("p", { class: "tagged" }, flow),
    ]);
  });
  return el("section", { class: "card inspector" }, [
    el("h2", {}, ["Pipeline inspector"]),
    el("p", {}, [el("strong", {}, ["Corrected text: "]), state.correctedText]),
    ...sentences,
  ]);
}

function renderModelEditor(state: ViewState, handlers: Handlers): HTMLElement {
  const model = state.model!;
  const cards = model.actors.map((actor) => {
    const useCases = model.associations[actor.key] ?? [];
    const rows = useCases.map((useCase) => {
      const reassign = button("reassign", "link", () => {
        const target = promptText(
          `Move "${useCase.phrase}" to which actor key?`);
        if (target && target !== actor.key) {
          handlers.applyEdit({
            kind: "reassign_use_case",
            phrase: useCase.phrase,
            from_key: actor.key,
            to_key: target.toLowerCase(),
          });
        }
      });
      const rename = button("rename", "link", () => {
        const next = promptText("New use case phrase (verb object):", useCase.phrase);
        if (next && next !== useCase.phrase) {
          handlers.applyEdit({
            kind: "rename_use_case",
            actor_key: actor.key,
            old_phrase: useCase.phrase,
            new_phrase: next,
          });
        }
      });
      const remove = button("remove", "link danger", () =>
        handlers.applyEdit({
          kind: "remove_use_case",
          actor_key: actor.key,
          phrase: useCase.phrase,
        }));
      return el("li", { class: "use-case-row" }, [
        el("span", { class: "phrase" }, [useCase.phrase]),
        rename, reassign, remove,
      ]);
    });
    const addUseCase = button("+ use case", "link", () => {
      const phrase = promptText(`New use case for ${actor.name} (verb object):`);
      if (phrase) {
        handlers.applyEdit({ kind: "add_use_case", actor_key: actor.key, phrase });
      }
    });
    const renameActor = button("rename", "link", () => {
      const next = promptText("New actor name:", actor.name);
      if (next && next !== actor.name) {
        handlers.applyEdit({ kind: "rename_actor", key: actor.key, new_name: next });
      }
    });
    const removeActor = button("remove", "link danger", () =>
      handlers.applyEdit({ kind: "remove_actor", key: actor.key }));
    return el("article", { class: "actor-card", "data-actor": actor.key }, [
      el("header", {}, [
        el("h3", { class: "actor-name" }, [actor.name]),
        renameActor, removeActor,
      ]),
      el("ul", { class: "use-cases" }, rows),
      addUseCase,
    ]);
  });

  const addActor = button("+ actor", "secondary", () => {
    const name = promptText("New actor name:");
    if (name) handlers.applyEdit({ kind: "add_actor", name });
  });
  const undoButton = button("Undo", "secondary", handlers.undo);
  undoButton.id = "undo-button";
  const droppedRows = state.dropped.map(([key, useCase]) =>
    el("li", {}, [`${useCase.phrase} (was under ${key})`]));
  const droppedBlock = droppedRows.length
    ? el("details", { class: "dropped" }, [
        el("summary", {}, [`Filtered out by the classifier (${droppedRows.length})`]),
        el("ul", {}, droppedRows),
      ])
    : el("div", {});

  return el("section", { class: "card model-editor" }, [
    el("h2", {}, ["Model editor"]),
    el("p", { class: "stats", id: "model-stats" }, [
      `${actorCount(state)} actor(s), ${useCaseCount(state)} use case(s) — revision `,
      el("span", { id: "revision" }, [String(state.revision)]),
    ]),
    el("div", { class: "actor-grid" }, cards),
    el("div", { class: "row" }, [addActor, undoButton]),
    droppedBlock,
  ]);
}

function renderPlantumlPane(state: ViewState, handlers: Handlers): HTMLElement {
  const pre = el("pre", { id: "plantuml-pane" }, [state.plantuml]);
  const copy = button("Copy", "secondary", () => handlers.copyPlantuml(state.plantuml));
  return el("section", { class: "card plantuml" }, [
    el("h2", {}, ["PlantUML source"]),
    copy,
    pre,
  ]);
}
