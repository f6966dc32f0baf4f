package com.sample.bank;

public class Ledger {
    Account account;
    int total;

    public Ledger() {
        total = 0;
    }

    public Account open(int start) {
        Account created = new Account(start);
        created.init();
        return created;
    }

    public void record(Account account, int amount) {
        total = total + amount;
        account.deposit(amount);
    }

    public int getTotal() {
        return total;
    }
}
