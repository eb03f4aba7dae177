/** Onboarding tabs: Intro (why and how comments help, served verbatim),
 *  Manual (the interactive features), and Profile (contribution history,
 *  needs a signed-in session). */

import { HttpError, type ServiceClient } from "./api.js";
import type { OnboardingIntro, OnboardingManual, OnboardingSection } from "./types.js";

const TABS = ["intro", "manual", "profile"] as const;
export type TabName = (typeof TABS)[number];

export class OnboardingTabs {
  readonly root: HTMLElement;
  private panel: HTMLElement;

  constructor(private client: ServiceClient, host: HTMLElement) {
    this.root = document.createElement("section");
    this.root.className = "onboarding";
    this.root.setAttribute("aria-label", "Getting started");
    const tablist = document.createElement("div");
    tablist.setAttribute("role", "tablist");
    tablist.setAttribute("aria-label", "Onboarding pages");
    for (const name of TABS) {
      const tab = document.createElement("button");
      tab.type = "button";
      tab.setAttribute("role", "tab");
      tab.id = `tab-${name}`;
      tab.textContent = name[0].toUpperCase() + name.slice(1);
      tab.addEventListener("click", () => void this.open(name));
      tablist.appendChild(tab);
    }
    this.panel = document.createElement("div");
    this.panel.setAttribute("role", "tabpanel");
    this.panel.setAttribute("aria-label", "Onboarding content");
    this.root.append(tablist, this.panel);
    host.appendChild(this.root);
  }

  async open(name: TabName): Promise<void> {
    this.panel.textContent = "";
    if (name === "intro") this.renderIntro(await this.client.getOnboarding("intro"));
    else if (name === "manual") this.renderManual(await this.client.getOnboarding("manual"));
    else await this.renderProfile();
  }

  private renderSection(section: OnboardingSection): HTMLElement {
    const wrap = document.createElement("section");
    const heading = document.createElement("h3");
    heading.textContent = section.heading;
    const body = document.createElement("p");
    body.textContent = section.body;
    wrap.append(heading, body);
    const addList = (items: string[] | undefined) => {
      if (!items || !items.length) return;
      const ul = document.createElement("ul");
      for (const item of items) {
        const li = document.createElement("li");
        li.textContent = item;
        ul.appendChild(li);
      }
      wrap.appendChild(ul);
    };
    addList(section.items);
    addList(section.examples);
    for (const note of section.notes ?? []) {
      const p = document.createElement("p");
      p.textContent = note;
      wrap.appendChild(p);
    }
    if (section.more_examples_heading) {
      const p = document.createElement("p");
      p.textContent = section.more_examples_heading;
      wrap.appendChild(p);
    }
    addList(section.more_examples);
    return wrap;
  }

  private renderIntro(intro: OnboardingIntro): void {
    const heading = document.createElement("h2");
    heading.textContent = intro.title;
    this.panel.appendChild(heading);
    for (const section of intro.sections) this.panel.appendChild(this.renderSection(section));
  }

  private renderManual(manual: OnboardingManual): void {
    const heading = document.createElement("h2");
    heading.textContent = manual.title;
    const list = document.createElement("ul");
    for (const feature of manual.features) {
      const item = document.createElement("li");
      item.dataset.kind = feature.kind;
      const name = document.createElement("strong");
      name.textContent = feature.name;
      const desc = document.createElement("span");
      desc.textContent = ` — ${feature.description}`;
      item.append(name, desc);
      list.appendChild(item);
    }
    this.panel.append(heading, list);
  }

  private async renderProfile(): Promise<void> {
    try {
      const history = await this.client.getHistory();
      const heading = document.createElement("h2");
      heading.textContent = `Contributions by ${history.display_name}`;
      this.panel.appendChild(heading);
      if (!history.comment_ids.length) {
        const empty = document.createElement("p");
        empty.textContent = "No comments yet.";
        this.panel.appendChild(empty);
        return;
      }
      const list = document.createElement("ul");
      for (const id of history.comment_ids) {
        const item = document.createElement("li");
        item.textContent = id;
        list.appendChild(item);
      }
      this.panel.appendChild(list);
    } catch (err) {
      if (err instanceof HttpError && err.status === 401) {
        const prompt = document.createElement("p");
        prompt.className = "login-prompt";
        prompt.textContent = "Sign in to see your contribution history.";
        this.panel.appendChild(prompt);
        return;
      }
      throw err;
    }
  }
}
