import { ApiClient } from "./api.js";
import { Controller } from "./controller.js";

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app container");
}
const copy = (text: string) => {
  void navigator.clipboard?.writeText(text);
};
new Controller(new ApiClient(), root, copy).start();
