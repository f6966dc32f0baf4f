package com.sample.ui;

public class Button extends Widget implements Disposable {
    String label;

    public Button(String label) {
        this.label = label;
    }

    public void click() {
        refresh();
        label = "clicked";
    }

    public void dispose() {
        super.dispose();
        label = "";
    }
}
