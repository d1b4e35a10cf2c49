import { App, installForm } from "./app.js";

const root = document.getElementById("app");
const form = document.getElementById("new-game");
if (root instanceof HTMLElement && form instanceof HTMLFormElement) {
  installForm(form, new App(root));
}
