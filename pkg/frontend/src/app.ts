import { ExplorerClient } from "./api.js";
import {
  initialViewState,
  toggleExpanded,
  withSession,
  withUnreachable,
  withViolation,
  type ViewState,
} from "./state.js";
import {
  renderCluster,
  renderFoldedQuiver,
  renderHistory,
  renderPeriodicQuiver,
  renderWitnessToast,
  witnessSites,
} from "./render.js";

export interface AppElements {
  periodicPane: HTMLElement;
  foldedPane: HTMLElement;
  clusterPane: HTMLElement;
  historyPane: HTMLElement;
  toastPane: HTMLElement;
  statusPane: HTMLElement;
  presetForm: HTMLElement;
  undoButton: HTMLButtonElement;
}

/**
 * The explorer application. All quiver structure shown on screen comes from
 * the last service payload; the app only routes clicks and re-renders.
 */
export class ExplorerApp {
  state: ViewState = initialViewState();

  constructor(
    private readonly client: ExplorerClient,
    private readonly el: AppElements,
  ) {}

  async start(preset: string, n?: number): Promise<void> {
    try {
      const session = await this.client.createSession({ preset, n });
      this.state = withSession(this.state, session);
    } catch (err) {
      this.state = withUnreachable(this.state);
      this.el.statusPane.textContent =
        "service unreachable — read-only mode (" + String(err) + ")";
    }
    this.render();
  }

  async clickOrbit(orbit: number, frozen: boolean): Promise<void> {
    const session = this.state.session;
    if (!session || frozen) return; // frozen orbits are a disabled affordance
    const result = await this.client.mutate(session.id, orbit);
    switch (result.kind) {
      case "ok":
        this.state = withSession(this.state, result.state);
        break;
      case "violation":
        this.state = withViolation(this.state, result.witness, result.violations);
        break;
      case "frozen":
        this.el.statusPane.textContent = result.message;
        break;
      case "error":
        this.state = withUnreachable(this.state);
        this.el.statusPane.textContent = result.message;
        break;
    }
    this.render();
  }

  async clickUndo(): Promise<void> {
    const session = this.state.session;
    if (!session || session.undoDepth === 0) return;
    try {
      const restored = await this.client.undo(session.id);
      this.state = withSession(this.state, restored);
    } catch (err) {
      this.el.statusPane.textContent = String(err);
    }
    this.render();
  }

  clickExpand(site: string): void {
    this.state = toggleExpanded(this.state, site);
    this.render();
  }

  render(): void {
    const { session, lastWitness, expandedSites } = this.state;
    if (!session) {
      this.el.periodicPane.innerHTML = "<em>no session</em>";
      this.el.foldedPane.innerHTML = "";
      this.el.clusterPane.innerHTML = "";
      this.el.historyPane.innerHTML = "";
      return;
    }
    this.el.periodicPane.innerHTML = renderPeriodicQuiver(session.periodic, {
      witnessSites: lastWitness ? witnessSites(lastWitness.violations) : [],
      selectedOrbit: this.state.selectedOrbit,
    });
    this.el.foldedPane.innerHTML = renderFoldedQuiver(session.folded);
    this.el.clusterPane.innerHTML = renderCluster(session.cluster, expandedSites);
    this.el.historyPane.innerHTML = renderHistory(session.history);
    this.el.toastPane.innerHTML = lastWitness
      ? renderWitnessToast(lastWitness.witness, lastWitness.violations)
      : "";
    this.el.undoButton.disabled = session.undoDepth === 0;
    this.el.statusPane.textContent = session.admissible
      ? "admissible"
      : "inadmissible";
    this.bindHandlers();
  }

  private bindHandlers(): void {
    for (const node of this.el.periodicPane.querySelectorAll("g.site")) {
      const site = Number(node.getAttribute("data-site"));
      const frozen = node.getAttribute("data-frozen") === "true";
      (node as unknown as HTMLElement).addEventListener("click", () => {
        void this.clickOrbit(site, frozen);
      });
    }
    for (const node of this.el.clusterPane.querySelectorAll("button.expand")) {
      const site = node.getAttribute("data-expand") ?? "";
      (node as HTMLElement).addEventListener("click", () => this.clickExpand(site));
    }
  }
}

export function mountApp(root: Document, baseUrl: string): ExplorerApp {
  const get = (id: string) => {
    const node = root.getElementById(id);
    if (!node) throw new Error(`missing #${id}`);
    return node as HTMLElement;
  };
  const app = new ExplorerApp(new ExplorerClient(baseUrl), {
    periodicPane: get("periodic"),
    foldedPane: get("folded"),
    clusterPane: get("cluster"),
    historyPane: get("history"),
    toastPane: get("toast"),
    statusPane: get("status"),
    presetForm: get("preset-form"),
    undoButton: get("undo") as HTMLButtonElement,
  });
  get("undo").addEventListener("click", () => void app.clickUndo());
  get("preset-form").addEventListener("submit", (event) => {
    event.preventDefault();
    const preset = (root.getElementById("preset") as HTMLSelectElement).value;
    const n = Number((root.getElementById("preset-n") as HTMLInputElement).value) || undefined;
    void app.start(preset, n);
  });
  return app;
}
