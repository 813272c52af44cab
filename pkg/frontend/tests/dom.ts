// Shared DOM skeleton matching index.html's pane ids.

export function mountSkeleton(): void {
  document.body.innerHTML = `
    <form id="preset-form">
      <select id="preset"><option value="gammaInfinity">g</option></select>
      <input id="preset-n" value="2" />
      <button id="undo" type="button" disabled>undo</button>
      <span id="status"></span>
    </form>
    <div id="toast"></div>
    <div id="history"></div>
    <div id="periodic"></div>
    <div id="folded"></div>
    <div id="cluster"></div>
  `;
}
